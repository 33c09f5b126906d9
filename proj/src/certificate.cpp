#include "degmat/certificate.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace degmat {

Json ring_to_json(const PolyRing& ring) {
  return Json{{"n", ring.n()},
              {"m", ring.m()},
              {"nvars", ring.nvars()},
              {"order", ring.order_description()}};
}

Json qmat_to_json(const QMat& M) {
  Json rows = Json::array();
  for (int r = 0; r < M.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < M.cols; ++c) row.push_back(rat_to_string(M.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMat qmat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("qmat_from_json: expected array");
  QMat M = QMat::zero(static_cast<int>(j.size()), static_cast<int>(j[0].size()));
  for (int r = 0; r < M.rows; ++r) {
    if (static_cast<int>(j[static_cast<size_t>(r)].size()) != M.cols)
      throw std::invalid_argument("qmat_from_json: ragged rows");
    for (int c = 0; c < M.cols; ++c)
      M.at(r, c) = parse_rat(j[static_cast<size_t>(r)][static_cast<size_t>(c)].get<std::string>());
  }
  return M;
}

Json tensor_to_json(const Tensor& T) {
  Json slices = Json::array();
  for (const auto& s : T.slices) slices.push_back(qmat_to_json(s));
  return Json{{"m", T.m}, {"n", T.n}, {"slices", std::move(slices)}};
}

Tensor tensor_from_json(const Json& j) {
  Tensor T = Tensor::zero(j.at("m").get<int>(), j.at("n").get<int>());
  const Json& slices = j.at("slices");
  if (static_cast<int>(slices.size()) != T.m)
    throw std::invalid_argument("tensor_from_json: slice count mismatch");
  for (int i = 0; i < T.m; ++i) {
    QMat s = qmat_from_json(slices[static_cast<size_t>(i)]);
    if (s.rows != T.n || s.cols != T.n)
      throw std::invalid_argument("tensor_from_json: slice shape mismatch");
    T.slices[static_cast<size_t>(i)] = std::move(s);
  }
  return T;
}

Json generator_set_to_json(const GeneratorSet& set, bool include_elements) {
  Json j{{"family", family_name(set.family)},
         {"n", set.n},
         {"m", set.m},
         {"count", set.elements.size()}};
  if (include_elements) {
    Json elems = Json::array();
    for (size_t i = 0; i < set.elements.size(); ++i)
      elems.push_back(Json{{"poly", set.elements[i].to_string()},
                           {"provenance", i < set.provenance.size() ? set.provenance[i] : ""}});
    j["elements"] = std::move(elems);
  }
  return j;
}

Json poly_matrix_to_json(const PolyMatrix& M) {
  Json rows = Json::array();
  for (int r = 0; r < M.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < M.cols; ++c) row.push_back(M.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return Json{{"rows", M.rows}, {"cols", M.cols}, {"entries", std::move(rows)}};
}

Json basis_check_to_json(const BasisCheckResult& r) {
  Json j{{"is_basis", r.is_basis},
         {"pairs_examined", r.pairs_examined},
         {"pairs_skipped_by_criterion", r.pairs_skipped_by_criterion}};
  if (r.failing_pair) {
    j["failing_pair"] = Json{{"i", r.failing_pair->i},
                             {"j", r.failing_pair->j},
                             {"remainder", r.failing_pair->remainder.to_string()}};
  }
  return j;
}

std::string dump_certificate(const Json& cert) { return cert.dump(2) + "\n"; }

void write_certificate(const Json& cert, const std::string& path) {
  std::string text = dump_certificate(cert);
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open certificate path: " + path);
  out << text;
}

}  // namespace degmat

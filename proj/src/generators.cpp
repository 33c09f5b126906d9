#include "degmat/generators.hpp"

#include <map>
#include <stdexcept>
#include <unordered_set>

namespace degmat {

const char* family_name(Family f) {
  switch (f) {
    case Family::Quadric: return "quadric";
    case Family::BlockCubic: return "block_cubic";
    case Family::QuarticProduct: return "quartic_product";
    case Family::FanoMinor: return "fano_minor";
    case Family::ProductEquation: return "product_equation";
  }
  return "?";
}

PolyMatrix flattening(const RingPtr& ring, FlatteningMode mode) {
  const int n = ring->n();
  const int m = ring->m();
  if (mode == FlatteningMode::Slice) {
    PolyMatrix T = PolyMatrix::make(ring, m, n * n);
    for (int k = 1; k <= m; ++k)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          T.at(k - 1, (i - 1) * n + (j - 1)) = Poly::variable(ring, VarId{k, i, j});
    return T;
  }
  PolyMatrix T = PolyMatrix::make(ring, n, m * n);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= m; ++k)
      for (int j = 1; j <= n; ++j) {
        VarId v = mode == FlatteningMode::RowSide ? VarId{k, i, j} : VarId{k, j, i};
        T.at(i - 1, (k - 1) * n + (j - 1)) = Poly::variable(ring, v);
      }
  return T;
}

GeneratorSet det_pencil_generators(const RingPtr& ring) {
  const int n = ring->n();
  const int m = ring->m();
  GeneratorSet out;
  out.family = Family::Quadric;
  out.n = n;
  out.m = m;

  // det(sum_k lambda_k X_k) expanded by multilinearity in the rows: each
  // assignment rows -> slices contributes det(row_r of X_{f(r)}) to the
  // lambda-monomial of its content.
  std::map<std::vector<int>, Poly> by_alpha;
  std::vector<int> assign(static_cast<size_t>(n), 0);
  while (true) {
    PolyMatrix M = PolyMatrix::make(ring, n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        M.at(r, c) = Poly::variable(ring, VarId{assign[static_cast<size_t>(r)] + 1, r + 1, c + 1});
    std::vector<int> alpha(static_cast<size_t>(m), 0);
    for (int r = 0; r < n; ++r) ++alpha[static_cast<size_t>(assign[static_cast<size_t>(r)])];
    Poly d = determinant(M);
    auto it = by_alpha.find(alpha);
    if (it == by_alpha.end())
      by_alpha.emplace(std::move(alpha), std::move(d));
    else
      it->second = it->second + d;

    int pos = n - 1;
    while (pos >= 0 && assign[static_cast<size_t>(pos)] == m - 1) {
      assign[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++assign[static_cast<size_t>(pos)];
  }

  for (auto& [alpha, poly] : by_alpha) {
    if (poly.is_zero()) continue;
    std::string prov = "lambda^(";
    for (size_t i = 0; i < alpha.size(); ++i)
      prov += (i ? "," : "") + std::to_string(alpha[i]);
    prov += ")";
    out.elements.push_back(std::move(poly));
    out.provenance.push_back(std::move(prov));
  }
  return out;
}

namespace {

std::string index_list(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s + "}";
}

}  // namespace

GeneratorSet block_cubics(const RingPtr& ring) {
  if (ring->n() != 2) throw std::invalid_argument("block_cubics: defined for n = 2");
  const int m = ring->m();
  GeneratorSet out;
  out.family = Family::BlockCubic;
  out.n = 2;
  out.m = m;
  std::unordered_set<std::string> seen;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= m; ++k) {
        if (i == j || i == k || j == k) continue;
        PolyMatrix B = PolyMatrix::make(ring, 4, 4);
        for (int r = 1; r <= 2; ++r)
          for (int c = 1; c <= 2; ++c) {
            B.at(r - 1, c - 1) = Poly::variable(ring, VarId{i, r, c});
            B.at(r - 1, c + 1) = Poly::variable(ring, VarId{j, r, c});
            B.at(r + 1, c - 1) = Poly::variable(ring, VarId{k, r, c});
          }
        for (const auto& minor : minors_of(B, 3)) {
          if (!seen.insert(minor.value.to_string()).second) continue;
          out.elements.push_back(minor.value);
          out.provenance.push_back("(i,j,k)=(" + std::to_string(i) + "," + std::to_string(j) +
                                   "," + std::to_string(k) + ");rows=" + index_list(minor.row_set) +
                                   ";cols=" + index_list(minor.col_set));
        }
      }
  return out;
}

GeneratorSet quartic_products(const RingPtr& ring) {
  if (ring->n() != 2) throw std::invalid_argument("quartic_products: defined for n = 2");
  const int m = ring->m();
  GeneratorSet out;
  out.family = Family::QuarticProduct;
  out.n = 2;
  out.m = m;
  PolyMatrix T = flattening(ring, FlatteningMode::Slice);
  // Column pairs of T in the paper's 1-based labels: 12, 13, 24, 34.
  auto minor_set = [&](int a, int b) {
    std::vector<Poly> minors;
    for_each_combination(m, 2, [&](const std::vector<int>& rows) {
      Poly det = T.at(rows[0], a) * T.at(rows[1], b) - T.at(rows[0], b) * T.at(rows[1], a);
      minors.push_back(std::move(det));
    });
    return minors;
  };
  std::vector<Poly> g12 = minor_set(0, 1), g13 = minor_set(0, 2), g24 = minor_set(1, 3),
                    g34 = minor_set(2, 3);
  std::unordered_set<std::string> seen;
  auto emit_products = [&](const std::vector<Poly>& left, const std::vector<Poly>& right,
                           const std::string& tag) {
    for (size_t a = 0; a < left.size(); ++a)
      for (size_t b = 0; b < right.size(); ++b) {
        Poly prod = left[a] * right[b];
        if (prod.is_zero()) continue;
        if (!seen.insert(prod.to_string()).second) continue;
        out.elements.push_back(std::move(prod));
        out.provenance.push_back(tag + "[" + std::to_string(a) + "," + std::to_string(b) + "]");
      }
  };
  emit_products(g12, g24, "G12*G24");
  emit_products(g13, g34, "G13*G34");
  return out;
}

std::vector<Poly> candidate_basis(const RingPtr& ring) {
  if (ring->n() != 2) throw std::invalid_argument("candidate_basis: defined for n = 2");
  std::vector<Poly> basis;
  std::unordered_set<std::string> seen;
  auto push_monic = [&](const Poly& p) {
    Poly monic = p.monic();
    if (seen.insert(monic.to_string()).second) basis.push_back(std::move(monic));
  };
  for (const auto& q : det_pencil_generators(ring).elements) push_monic(q);
  if (ring->m() >= 3)
    for (const auto& c : block_cubics(ring).elements) push_monic(c);
  for (const auto& p : quartic_products(ring).elements) push_monic(p);
  return basis;
}

GeneratorSet fano_minors(const RingPtr& ring) {
  const int n = ring->n();
  const int m = ring->m();
  GeneratorSet out;
  out.family = Family::FanoMinor;
  out.n = n;
  out.m = m;
  const int t = n * n - n + 1;
  if (m < t) return out;
  PolyMatrix T = flattening(ring, FlatteningMode::Slice);
  for (auto& minor : minors_of(T, t)) {
    out.provenance.push_back("rows=" + index_list(minor.row_set) +
                             ";cols=" + index_list(minor.col_set));
    out.elements.push_back(std::move(minor.value));
  }
  return out;
}

ProductEquationStream::ProductEquationStream(RingPtr ring) : ring_(std::move(ring)) {
  const int n = ring_->n();
  const int m = ring_->m();
  const int tm = n * n - 2 * n + 3;
  meets_bound_ = m >= tm;
  if (!meets_bound_) return;
  PolyMatrix slice = flattening(ring_, FlatteningMode::Slice);
  for (auto& mr : minors_of(slice, tm)) jm_.push_back(std::move(mr.value));
  PolyMatrix rows = flattening(ring_, FlatteningMode::RowSide);
  for (auto& mr : minors_of(rows, n)) j1_.push_back(std::move(mr.value));
  PolyMatrix cols = flattening(ring_, FlatteningMode::ColSide);
  for (auto& mr : minors_of(cols, n)) j2_.push_back(std::move(mr.value));
}

ProductEquationStream::Item ProductEquationStream::item_at(uint64_t flat_index) const {
  if (flat_index >= total_count())
    throw std::out_of_range("ProductEquationStream: index out of range");
  uint64_t inner = static_cast<uint64_t>(j1_.size()) * j2_.size();
  Item it;
  it.gi = static_cast<size_t>(flat_index / inner);
  uint64_t rest = flat_index % inner;
  it.hi = static_cast<size_t>(rest / j2_.size());
  it.ki = static_cast<size_t>(rest % j2_.size());
  return it;
}

ProductEquationStream::Item ProductEquationStream::sample(Rng& rng) const {
  if (empty()) throw std::logic_error("ProductEquationStream: sampling an empty stream");
  Item it;
  it.gi = static_cast<size_t>(rng.uniform(0, static_cast<long>(jm_.size()) - 1));
  it.hi = static_cast<size_t>(rng.uniform(0, static_cast<long>(j1_.size()) - 1));
  it.ki = static_cast<size_t>(rng.uniform(0, static_cast<long>(j2_.size()) - 1));
  return it;
}

Poly ProductEquationStream::product(const Item& it) const {
  return jm_[it.gi] * j1_[it.hi] * j2_[it.ki];
}

int ProductEquationStream::product_degree() const {
  return ring_->n() * ring_->n() + 3;
}

}  // namespace degmat

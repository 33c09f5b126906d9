#include "degmat/tensor.hpp"

#include <stdexcept>

namespace degmat {

Tensor Tensor::zero(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("Tensor::zero: need m, n >= 1");
  Tensor T;
  T.m = m;
  T.n = n;
  T.slices.assign(static_cast<size_t>(m), QMat::zero(n, n));
  return T;
}

std::vector<Rat> Tensor::variable_values(const PolyRing& ring) const {
  if (ring.m() != m || ring.n() != n)
    throw std::invalid_argument("Tensor: dimension mismatch with ring");
  std::vector<Rat> values(static_cast<size_t>(ring.nvars()));
  for (int idx = 0; idx < ring.nvars(); ++idx) {
    VarId v = ring.var_at(idx);
    values[static_cast<size_t>(idx)] = slices[static_cast<size_t>(v.slice - 1)].at(v.row - 1, v.col - 1);
  }
  return values;
}

Rat evaluate_at(const Poly& f, const Tensor& T) {
  if (!f.ring()) return Rat(0);
  return f.evaluate(T.variable_values(*f.ring()));
}

GroupElement::GroupElement(QMat U_, QMat V_, QMat W_)
    : U(std::move(U_)), V(std::move(V_)), W(std::move(W_)) {
  if (U.rows != U.cols || V.rows != V.cols || W.rows != W.cols ||
      V.rows != W.rows)
    throw std::invalid_argument("GroupElement: shape mismatch");
  if (!is_invertible(U) || !is_invertible(V) || !is_invertible(W))
    throw std::invalid_argument("GroupElement: non-invertible component");
}

Tensor act(const GroupElement& g, const Tensor& T) {
  if (g.U.rows != T.m || g.V.rows != T.n)
    throw std::invalid_argument("act: shape mismatch");
  std::vector<QMat> transformed;
  transformed.reserve(static_cast<size_t>(T.m));
  for (const auto& slice : T.slices) transformed.push_back(g.V * slice * g.W);
  Tensor out = Tensor::zero(T.m, T.n);
  for (int j = 0; j < T.m; ++j) {
    QMat acc = QMat::zero(T.n, T.n);
    for (int i = 0; i < T.m; ++i) {
      const Rat& u = g.U.at(i, j);
      if (u == 0) continue;
      const QMat& S = transformed[static_cast<size_t>(i)];
      for (int r = 0; r < T.n; ++r)
        for (int c = 0; c < T.n; ++c) acc.at(r, c) += u * S.at(r, c);
    }
    out.slices[static_cast<size_t>(j)] = std::move(acc);
  }
  return out;
}

}  // namespace degmat

#include "degmat/linalg.hpp"

#include <stdexcept>

namespace degmat {

QMat QMat::zero(int rows, int cols) {
  QMat M;
  M.rows = rows;
  M.cols = cols;
  M.a.assign(static_cast<size_t>(rows) * cols, Rat(0));
  return M;
}

QMat QMat::identity(int n) {
  QMat M = zero(n, n);
  for (int i = 0; i < n; ++i) M.at(i, i) = 1;
  return M;
}

QMat operator*(const QMat& x, const QMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("QMat: shape mismatch in product");
  QMat r = QMat::zero(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

Rat det_exact(QMat M) {
  if (M.rows != M.cols) throw std::invalid_argument("det_exact: matrix not square");
  const int n = M.rows;
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (M.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != c) {
      for (int j = c; j < n; ++j) std::swap(M.at(pivot, j), M.at(c, j));
      det = -det;
    }
    det *= M.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (M.at(r, c) == 0) continue;
      Rat factor = M.at(r, c) / M.at(c, c);
      for (int j = c; j < n; ++j) M.at(r, j) -= factor * M.at(c, j);
    }
  }
  return det;
}

int rank_exact(QMat M) {
  int rank = 0;
  for (int c = 0; c < M.cols && rank < M.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < M.rows; ++r)
      if (M.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = c; j < M.cols; ++j) std::swap(M.at(pivot, j), M.at(rank, j));
    for (int r = rank + 1; r < M.rows; ++r) {
      if (M.at(r, c) == 0) continue;
      Rat factor = M.at(r, c) / M.at(rank, c);
      for (int j = c; j < M.cols; ++j) M.at(r, j) -= factor * M.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

bool is_invertible(const QMat& M) {
  return M.rows == M.cols && det_exact(M) != 0;
}

QMat inverse(const QMat& M) {
  if (M.rows != M.cols) throw std::invalid_argument("inverse: matrix not square");
  const int n = M.rows;
  QMat W = QMat::zero(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) W.at(i, j) = M.at(i, j);
    W.at(i, n + i) = 1;
  }
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (W.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::invalid_argument("inverse: singular matrix");
    if (pivot != c)
      for (int j = 0; j < 2 * n; ++j) std::swap(W.at(pivot, j), W.at(c, j));
    Rat inv = 1 / W.at(c, c);
    for (int j = 0; j < 2 * n; ++j) W.at(c, j) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || W.at(r, c) == 0) continue;
      Rat factor = W.at(r, c);
      for (int j = 0; j < 2 * n; ++j) W.at(r, j) -= factor * W.at(c, j);
    }
  }
  QMat out = QMat::zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = W.at(i, n + j);
  return out;
}

PolySpan::PolySpan(RingPtr ring)
    : ring_(std::move(ring)), rows_(MonoLess{ring_->nvars()}) {}

Poly PolySpan::reduce(Poly f) const {
  while (!f.is_zero()) {
    auto it = rows_.find(f.leading_monomial());
    if (it == rows_.end()) break;
    // Leading coefficients of stored rows are 1.
    f = f - it->second.scaled(f.leading_coeff());
  }
  return f;
}

bool PolySpan::insert(const Poly& f) {
  Poly r = reduce(f);
  if (r.is_zero()) return false;
  Poly row = r.monic();
  rows_.emplace(row.leading_monomial(), std::move(row));
  return true;
}

}  // namespace degmat

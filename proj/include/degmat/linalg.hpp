#pragma once

#include <map>
#include <vector>

#include "degmat/poly.hpp"
#include "degmat/rational.hpp"

namespace degmat {

// Dense exact rational matrix, row-major.
struct QMat {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  static QMat zero(int rows, int cols);
  static QMat identity(int n);

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  friend QMat operator*(const QMat& x, const QMat& y);
  bool operator==(const QMat&) const = default;
};

// Exact determinant by Gaussian elimination.
Rat det_exact(QMat M);

int rank_exact(QMat M);

bool is_invertible(const QMat& M);

QMat inverse(const QMat& M);  // throws on singular input

// Linear span of polynomials inside the monomial basis of one ring:
// incremental sparse Gaussian elimination with the monomial order as column
// order. This is the Groebner-free side of the membership checks.
class PolySpan {
 public:
  explicit PolySpan(RingPtr ring);

  // Eliminates f against the stored echelon rows; returns true (and stores
  // the reduced row) iff the rank grew.
  bool insert(const Poly& f);

  bool contains(const Poly& f) const { return reduce(f).is_zero(); }

  // Eliminates leading monomials against stored pivot rows until the lead is
  // no longer a pivot; the result is zero iff f lies in the span.
  Poly reduce(Poly f) const;

  size_t rank() const { return rows_.size(); }

 private:
  RingPtr ring_;
  std::map<Monomial, Poly, MonoLess> rows_;  // keyed by leading monomial
};

}  // namespace degmat

#pragma once

#include <vector>

#include "degmat/linalg.hpp"
#include "degmat/poly.hpp"

namespace degmat {

// Exact rational point of C^m (x) C^n (x) C^n: an m-tuple of n x n matrices.
struct Tensor {
  int m = 0;
  int n = 0;
  std::vector<QMat> slices;

  static Tensor zero(int m, int n);

  // Values of every ring variable at this point, indexed by variable index.
  std::vector<Rat> variable_values(const PolyRing& ring) const;
};

// Exact substitution of the tensor's entries into f.
Rat evaluate_at(const Poly& f, const Tensor& T);

// Element of GL_m x GL_n x GL_n; invertibility is checked exactly on
// construction.
struct GroupElement {
  QMat U;  // m x m
  QMat V;  // n x n
  QMat W;  // n x n

  GroupElement(QMat U, QMat V, QMat W);
};

// Mode-wise action: slice j of the result is sum_i U(i,j) * (V * A_i * W).
Tensor act(const GroupElement& g, const Tensor& T);

}  // namespace degmat

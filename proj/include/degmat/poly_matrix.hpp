#pragma once

#include <functional>
#include <vector>

#include "degmat/poly.hpp"

namespace degmat {

// Rectangular grid of polynomials over one common ring.
struct PolyMatrix {
  RingPtr ring;
  int rows = 0;
  int cols = 0;
  std::vector<Poly> entries;  // row-major

  static PolyMatrix make(RingPtr ring, int rows, int cols);

  Poly& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
  const Poly& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

  PolyMatrix submatrix(const std::vector<int>& row_set, const std::vector<int>& col_set) const;
};

// Exact symbolic determinant: Laplace expansion with memoization on column
// subsets, O(2^k * k) subdeterminants.
Poly determinant(const PolyMatrix& M);

struct Minor {
  Poly value;
  std::vector<int> row_set;  // 0-based, ascending
  std::vector<int> col_set;
};

// All t x t minors with nonzero determinant, deduplicated by canonical form.
// Each kept minor is tagged with the first (row_set, col_set) that produced
// it, in lexicographic enumeration order.
std::vector<Minor> minors_of(const PolyMatrix& M, int t);

// Visits every k-subset of {0,...,n-1} in lexicographic order.
void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace degmat

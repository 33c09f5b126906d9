#include "degmat/poly_matrix.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace degmat {

PolyMatrix PolyMatrix::make(RingPtr ring, int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("PolyMatrix::make: negative shape");
  PolyMatrix M;
  M.ring = ring;
  M.rows = rows;
  M.cols = cols;
  M.entries.assign(static_cast<size_t>(rows) * cols, Poly::zero(ring));
  return M;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& row_set,
                                 const std::vector<int>& col_set) const {
  PolyMatrix S = make(ring, static_cast<int>(row_set.size()), static_cast<int>(col_set.size()));
  for (size_t r = 0; r < row_set.size(); ++r)
    for (size_t c = 0; c < col_set.size(); ++c)
      S.at(static_cast<int>(r), static_cast<int>(c)) = at(row_set[r], col_set[c]);
  return S;
}

Poly determinant(const PolyMatrix& M) {
  if (M.rows != M.cols) throw std::invalid_argument("determinant: matrix not square");
  const int k = M.rows;
  if (k == 0) return Poly::constant(M.ring, Rat(1));
  if (k > 20) throw std::invalid_argument("determinant: matrix too large for subset expansion");

  // d[mask] = det of the submatrix on the first popcount(mask) rows and the
  // column set mask.
  std::vector<Poly> d(size_t(1) << k);
  d[0] = Poly::constant(M.ring, Rat(1));
  for (uint32_t mask = 1; mask < (uint32_t(1) << k); ++mask) {
    int r = std::popcount(mask) - 1;
    Poly acc = Poly::zero(M.ring);
    int pos = 0;
    for (int j = 0; j < k; ++j) {
      if (!(mask >> j & 1u)) continue;
      const Poly& e = M.at(r, j);
      if (!e.is_zero()) {
        Poly contrib = e * d[mask ^ (uint32_t(1) << j)];
        acc = ((r + pos) % 2 == 0) ? acc + contrib : acc - contrib;
      }
      ++pos;
    }
    d[mask] = std::move(acc);
  }
  return d[(uint32_t(1) << k) - 1];
}

void for_each_combination(int n, int k,
                          const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

std::vector<Minor> minors_of(const PolyMatrix& M, int t) {
  if (t < 1 || t > M.rows || t > M.cols)
    throw std::invalid_argument("minors_of: size out of range");
  std::vector<Minor> out;
  std::unordered_set<std::string> seen;
  for_each_combination(M.rows, t, [&](const std::vector<int>& rs) {
    for_each_combination(M.cols, t, [&](const std::vector<int>& cs) {
      Poly det = determinant(M.submatrix(rs, cs));
      if (det.is_zero()) return;
      if (seen.insert(det.to_string()).second) out.push_back({std::move(det), rs, cs});
    });
  });
  return out;
}

}  // namespace degmat

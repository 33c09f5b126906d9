#include "degmat/sampling.hpp"

#include <stdexcept>

namespace degmat {

namespace {
uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace

uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng Rng::fork(uint64_t stream) const { return Rng(mix64(state_ ^ mix64(stream))); }

long Rng::uniform(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
  uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Rat Rng::rational(long num_bound, long den_bound) {
  return make_rat(uniform(-num_bound, num_bound), uniform(1, den_bound));
}

QMat random_invertible(int n, Rng& rng) {
  while (true) {
    QMat M = QMat::zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M.at(i, j) = rng.rational();
    if (is_invertible(M)) return M;
  }
}

CompressionSpec random_compression_spec(int n, int m, int s, uint64_t seed) {
  if (s < 0 || s > n - 1) throw std::invalid_argument("compression spec: need 0 <= s <= n-1");
  CompressionSpec spec;
  spec.n = n;
  spec.m = m;
  spec.s = s;
  spec.seed = seed;
  Rng rng = Rng(seed).fork(0xbc5a51d1u);
  spec.left = random_invertible(n, rng);
  spec.right = random_invertible(n, rng);
  return spec;
}

Tensor sample_sing(const CompressionSpec& spec) {
  if (spec.s < 0 || spec.s > spec.n - 1)
    throw std::invalid_argument("sample_sing: invalid s");
  if (spec.left.rows != spec.n || spec.right.rows != spec.n)
    throw std::invalid_argument("sample_sing: basis change has wrong shape");
  Rng rng = Rng(spec.seed).fork(0x5a4d70e5u);
  Tensor T = Tensor::zero(spec.m, spec.n);
  for (auto& slice : T.slices) {
    // Zeros in rows s+1..n of columns 1..s+1; random entries elsewhere.
    for (int r = 0; r < spec.n; ++r)
      for (int c = 0; c < spec.n; ++c)
        if (r < spec.s || c > spec.s) slice.at(r, c) = rng.rational();
    slice = spec.left * slice * spec.right;
  }
  return T;
}

GroupElement random_group_element(int m, int n, Rng& rng) {
  QMat U = random_invertible(m, rng);
  QMat V = random_invertible(n, rng);
  QMat W = random_invertible(n, rng);
  return GroupElement(std::move(U), std::move(V), std::move(W));
}

}  // namespace degmat

#pragma once

#include <cstdint>

#include "degmat/tensor.hpp"

namespace degmat {

// Counter-based splitmix64 generator: deterministic across platforms and
// splittable, so parallel sampling stays reproducible.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next();

  // Independent child stream; forking does not advance this generator.
  Rng fork(uint64_t stream) const;

  // Inclusive bounds.
  long uniform(long lo, long hi);

  // Numerator uniform in [-num_bound, num_bound], denominator in [1, den_bound].
  Rat rational(long num_bound = 10, long den_bound = 10);

 private:
  uint64_t state_;
};

// Sampling recipe for a point of Sing_{n,m}: in adapted coordinates every
// slice maps the span of the first s+1 basis vectors into the span of the
// first s, then the slice tuple is conjugated by the basis change pair.
struct CompressionSpec {
  int n = 0;
  int m = 0;
  int s = 0;  // 0 <= s <= n-1
  QMat left;
  QMat right;
  uint64_t seed = 0;
};

// Random invertible matrix with small rational entries (rejection sampling).
QMat random_invertible(int n, Rng& rng);

// Spec with a random invertible basis change derived from the seed.
CompressionSpec random_compression_spec(int n, int m, int s, uint64_t seed);

// Every linear combination of the slices maps an (s+1)-dimensional space into
// an s-dimensional one, hence is singular.
Tensor sample_sing(const CompressionSpec& spec);

// Random group element (U, V, W) with small rational entries.
GroupElement random_group_element(int m, int n, Rng& rng);

}  // namespace degmat

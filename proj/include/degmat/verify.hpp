#pragma once

#include <optional>
#include <span>
#include <vector>

#include "degmat/linalg.hpp"
#include "degmat/poly.hpp"
#include "degmat/tensor.hpp"

namespace degmat {

struct VanishReport {
  bool all_vanish = true;
  // Index of the first element with a nonzero value, when any.
  std::optional<size_t> failing_index;
};

// Exact evaluation of every element at T.
VanishReport vanish_check(std::span<const Poly> polys, const Tensor& T);

// Graded membership without Groebner bases: true iff f lies in the rational
// span of { x^alpha * g : g in F, deg(x^alpha * g) = d_target }. Requires f
// and every element of F homogeneous.
bool degreewise_membership(const Poly& f, std::span<const Poly> F, int d_target);

// The span above, exposed so callers can amortize it across many queries.
PolySpan degreewise_span(const RingPtr& ring, std::span<const Poly> F, int d_target);

struct DitVerdict {
  bool all_singular = true;
  std::optional<std::vector<long>> witness;  // lambda with nonzero determinant
};

// Evaluates det(sum lambda_i A_i) exactly at `trials` random integer lambda
// vectors with entries in [-coeff_bound, coeff_bound].
DitVerdict dit_random(const Tensor& T, int trials, uint64_t seed, long coeff_bound = 10);

}  // namespace degmat

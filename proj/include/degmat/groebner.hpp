#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "degmat/poly.hpp"

namespace degmat {

struct FailingPair {
  size_t i = 0;
  size_t j = 0;
  Poly remainder;
};

// Verdict of a Buchberger-criterion check. pairs_examined counts pairs whose
// S-polynomial was actually reduced (including a failing one);
// pairs_skipped_by_criterion counts product-criterion skips. On success the
// two add up to the total number of unordered pairs.
struct BasisCheckResult {
  bool is_basis = false;
  std::optional<FailingPair> failing_pair;
  uint64_t pairs_examined = 0;
  uint64_t pairs_skipped_by_criterion = 0;
};

struct GroebnerBasis {
  std::vector<Poly> generators;  // monic; ascending by leading monomial when reduced
  bool reduced = false;
};

// (lcm/LT(f)) f - (lcm/LT(g)) g; leading terms cancel.
Poly s_polynomial(const Poly& f, const Poly& g);

// Multivariate division remainder. Deterministic: at each step the divisor is
// the first element of G (in list order) whose leading monomial divides the
// current leading monomial.
Poly normal_form(const Poly& f, std::span<const Poly> G);

struct GbCheckOptions {
  int threads = 1;  // 0 = hardware concurrency
  // Reduce coprime-leading-monomial pairs anyway and require zero (test flag).
  bool verify_skipped_pairs = false;
};

// Pairs are processed in lexicographic (i, j) order; the reported failure is
// the first in that order. The result does not depend on the thread count.
BasisCheckResult is_groebner_basis(std::span<const Poly> G, const GbCheckOptions& opts = {});

struct BuchbergerOptions {
  // The product criterion is always applied; the lcm-chain criterion is
  // optional and off by default.
  bool use_chain_criterion = false;
};

// Completes F to the reduced Groebner basis. Deterministic given the input
// list order: the pair queue is ordered by (lcm total degree, index pair).
GroebnerBasis buchberger(std::vector<Poly> F, const BuchbergerOptions& opts = {});

// True iff every generator's leading monomial has all exponents equal to 1.
bool leading_ideal_squarefree(const GroebnerBasis& G);

}  // namespace degmat

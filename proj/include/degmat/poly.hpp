#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degmat/monomial.hpp"
#include "degmat/rational.hpp"
#include "degmat/ring.hpp"

namespace degmat {

struct Term {
  Monomial mono;
  Rat coeff;
};

// Sparse multivariate polynomial in canonical form: term list strictly
// descending in the ring order, no zero coefficients, no duplicates.
// Immutable after construction; all operations return fresh values.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, Rat c);
  static Poly variable(const RingPtr& ring, VarId v);
  static Poly variable(const RingPtr& ring, int index);
  // Normalizes: sorts, combines duplicates, drops zeros.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);
  // Trusts the input to already be canonical (strictly descending, no zeros).
  static Poly from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rat& leading_coeff() const { return leading_term().coeff; }

  // Zero polynomial has no degree.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const Rat& c) const;
  Poly mul_term(const Rat& c, const Monomial& m) const;
  Poly monic() const;

  // Exact substitution; values indexed by variable index, one per ring
  // variable.
  Rat evaluate(std::span<const Rat> values) const;

  bool operator==(const Poly& b) const;

  std::string to_string() const;
  static Poly parse(const RingPtr& ring, const std::string& text);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Throws std::invalid_argument unless both polynomials live in compatible
// rings; returns that ring.
const RingPtr& common_ring(const Poly& a, const Poly& b);

std::strong_ordering compare_monomials(const PolyRing& ring, const Monomial& a,
                                       const Monomial& b);

}  // namespace degmat

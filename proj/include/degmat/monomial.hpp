#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "degmat/ring.hpp"

namespace degmat {

// Exponent vector with cached total degree and variable-support mask.
// Index 0 is the greatest variable of the ring order.
class Monomial {
 public:
  Monomial() = default;

  static Monomial one() { return Monomial(); }
  static Monomial variable(int index, int exponent = 1);

  int exponent(int index) const { return exp_[static_cast<size_t>(index)]; }
  void set_exponent(int index, int e);

  int degree() const { return degree_; }
  uint64_t support() const { return mask_; }
  bool is_one() const { return degree_ == 0; }
  bool squarefree() const;

  static Monomial mul(const Monomial& a, const Monomial& b);
  // a / b; requires divides(b, a)
  static Monomial quotient(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool divides(const Monomial& a, const Monomial& b);  // a | b
  static bool coprime(const Monomial& a, const Monomial& b) {
    return (a.mask_ & b.mask_) == 0;
  }

  // Graded reverse lexicographic: higher total degree wins; on equal degree
  // the last nonzero entry of a-b (variables scanned from greatest to least)
  // decides, negative meaning a > b.
  static std::strong_ordering compare(const Monomial& a, const Monomial& b, int nvars);

  bool operator==(const Monomial& b) const {
    return degree_ == b.degree_ && mask_ == b.mask_ && exp_ == b.exp_;
  }

 private:
  std::array<uint8_t, PolyRing::kMaxVars> exp_{};
  uint64_t mask_ = 0;
  uint16_t degree_ = 0;
};

// Comparator object for containers keyed by monomials of one ring.
struct MonoLess {
  int nvars;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b, nvars) == std::strong_ordering::less;
  }
};

// All monomials of the given total degree, in descending order.
std::vector<Monomial> monomials_of_degree(const PolyRing& ring, int degree);

}  // namespace degmat

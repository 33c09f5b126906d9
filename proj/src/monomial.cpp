#include "degmat/monomial.hpp"
#include <algorithm>

#include <stdexcept>

namespace degmat {

Monomial Monomial::variable(int index, int exponent) {
  Monomial m;
  m.set_exponent(index, exponent);
  return m;
}

void Monomial::set_exponent(int index, int e) {
  if (index < 0 || index >= PolyRing::kMaxVars)
    throw std::out_of_range("Monomial::set_exponent: bad variable index");
  if (e < 0 || e > 255) throw std::overflow_error("Monomial::set_exponent: exponent out of range");
  auto i = static_cast<size_t>(index);
  degree_ = static_cast<uint16_t>(degree_ - exp_[i] + e);
  exp_[i] = static_cast<uint8_t>(e);
  if (e > 0)
    mask_ |= uint64_t(1) << index;
  else
    mask_ &= ~(uint64_t(1) << index);
}

bool Monomial::squarefree() const {
  if (degree_ == 0) return true;
  for (uint64_t m = mask_; m; m &= m - 1) {
    int i = __builtin_ctzll(m);
    if (exp_[static_cast<size_t>(i)] > 1) return false;
  }
  return true;
}

Monomial Monomial::mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (uint64_t m = b.mask_; m; m &= m - 1) {
    auto i = static_cast<size_t>(__builtin_ctzll(m));
    int e = r.exp_[i] + b.exp_[i];
    if (e > 255) throw std::overflow_error("Monomial::mul: exponent overflow");
    r.exp_[i] = static_cast<uint8_t>(e);
  }
  r.mask_ |= b.mask_;
  r.degree_ = static_cast<uint16_t>(a.degree_ + b.degree_);
  return r;
}

Monomial Monomial::quotient(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (uint64_t m = b.mask_; m; m &= m - 1) {
    auto i = static_cast<size_t>(__builtin_ctzll(m));
    if (r.exp_[i] < b.exp_[i]) throw std::invalid_argument("Monomial::quotient: not divisible");
    r.exp_[i] = static_cast<uint8_t>(r.exp_[i] - b.exp_[i]);
    if (r.exp_[i] == 0) r.mask_ &= ~(uint64_t(1) << i);
  }
  r.degree_ = static_cast<uint16_t>(a.degree_ - b.degree_);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  int deg = a.degree_;
  for (uint64_t m = b.mask_; m; m &= m - 1) {
    auto i = static_cast<size_t>(__builtin_ctzll(m));
    if (b.exp_[i] > r.exp_[i]) {
      deg += b.exp_[i] - r.exp_[i];
      r.exp_[i] = b.exp_[i];
    }
  }
  r.mask_ |= b.mask_;
  r.degree_ = static_cast<uint16_t>(deg);
  return r;
}

bool Monomial::divides(const Monomial& a, const Monomial& b) {
  if ((a.mask_ & ~b.mask_) != 0) return false;
  if (a.degree_ > b.degree_) return false;
  for (uint64_t m = a.mask_; m; m &= m - 1) {
    auto i = static_cast<size_t>(__builtin_ctzll(m));
    if (a.exp_[i] > b.exp_[i]) return false;
  }
  return true;
}

std::strong_ordering Monomial::compare(const Monomial& a, const Monomial& b, int nvars) {
  if (a.degree_ != b.degree_)
    return a.degree_ < b.degree_ ? std::strong_ordering::less : std::strong_ordering::greater;
  for (int i = nvars - 1; i >= 0; --i) {
    auto ai = a.exp_[static_cast<size_t>(i)];
    auto bi = b.exp_[static_cast<size_t>(i)];
    if (ai != bi) return ai < bi ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

namespace {
void enumerate_rec(const PolyRing& ring, int index, int remaining, Monomial& current,
                   std::vector<Monomial>& out) {
  if (index == ring.nvars() - 1) {
    Monomial m = current;
    m.set_exponent(index, remaining);
    out.push_back(m);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current.set_exponent(index, e);
    enumerate_rec(ring, index + 1, remaining - e, current, out);
  }
  current.set_exponent(index, 0);
}
}  // namespace

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (degree == 0) {
    out.push_back(Monomial::one());
    return out;
  }
  Monomial current;
  enumerate_rec(ring, 0, degree, current, out);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return Monomial::compare(a, b, ring.nvars()) == std::strong_ordering::greater;
  });
  return out;
}

}  // namespace degmat

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace degmat {

// Exact rational / integer scalars. All arithmetic in the library is exact;
// there is no floating-point mode.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Canonical form "num" or "num/den", lowest terms, positive denominator.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace degmat

#pragma once

#include <string>
#include <vector>

#include "degmat/rational.hpp"

namespace degmat {

// Young diagram: weakly decreasing positive parts; the empty partition is
// allowed and has size 0.
struct Partition {
  std::vector<int> parts;

  static Partition of(std::vector<int> parts);  // validates
  static Partition parse(const std::string& csv);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  int part(int i) const { return i < length() ? parts[static_cast<size_t>(i)] : 0; }
  bool contains(const Partition& inner) const;

  std::string to_string() const;
  bool operator==(const Partition&) const = default;
};

// All partitions of d, descending lexicographic order.
std::vector<Partition> partitions_of(int d);

Int binomial(long n, long k);

// dim S^lambda(C^q) by the hook content formula; 0 when lambda has more than
// q parts.
Int schur_dim(const Partition& lambda, int q);

struct CauchyReport {
  bool equal = false;
  Int lhs;  // dim S^d(C^m (x) C^q)
  Int rhs;  // sum over lambda |- d of dim S^lambda(C^m) * dim S^lambda(C^q)
};

CauchyReport cauchy_check(int d, int m, int q);

// c^nu_{lambda,mu}: number of Littlewood-Richardson skew tableaux of shape
// nu/lambda and content mu, by exhaustive enumeration.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

struct ObstructionReport {
  bool ok = false;
  int n = 0;
  int dprime_max = 0;
  bool column_first_part_below_n = false;  // part (a)
  bool all_products_contain_row_n = false;  // part (b)
  long triples_checked = 0;
  long positive_coefficients = 0;
};

// (a) the column partition 1^(n^2-n+1) has first part 1 < n; (b) every mu
// with c^mu_{(n),nu} > 0, nu |- d' <= dprime_max, satisfies mu_1 >= n.
ObstructionReport obstruction_check(int n, int dprime_max);

}  // namespace degmat

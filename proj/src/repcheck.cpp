#include "degmat/repcheck.hpp"

#include <sstream>
#include <stdexcept>

namespace degmat {

Partition Partition::of(std::vector<int> parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  Partition p;
  p.parts = std::move(parts);
  return p;
}

Partition Partition::parse(const std::string& csv) {
  std::vector<int> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) parts.push_back(std::stoi(item));
  return of(std::move(parts));
}

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.parts[static_cast<size_t>(i)] > parts[static_cast<size_t>(i)]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

namespace {
void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{current});
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  if (d < 0) return out;
  std::vector<int> current;
  partitions_rec(d, d == 0 ? 1 : d, current, out);
  return out;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int schur_dim(const Partition& lambda, int q) {
  if (q < 0) throw std::invalid_argument("schur_dim: q must be nonnegative");
  if (lambda.length() > q) return Int(0);
  if (lambda.parts.empty()) return Int(1);
  // Conjugate part lengths for hooks.
  int cols = lambda.parts[0];
  std::vector<int> conj(static_cast<size_t>(cols), 0);
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.parts[static_cast<size_t>(i)]; ++j) ++conj[static_cast<size_t>(j)];
  Rat product(1);
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.parts[static_cast<size_t>(i - 1)]; ++j) {
      long content = q + j - i;
      long hook = lambda.parts[static_cast<size_t>(i - 1)] - j + conj[static_cast<size_t>(j - 1)] - i + 1;
      product *= Rat(content, hook);
    }
  }
  product.canonicalize();
  if (product.get_den() != 1)
    throw std::logic_error("schur_dim: hook content product is not an integer");
  return product.get_num();
}

CauchyReport cauchy_check(int d, int m, int q) {
  if (d < 1 || m < 1 || q < 1) throw std::invalid_argument("cauchy_check: need d, m, q >= 1");
  CauchyReport report;
  report.lhs = binomial(static_cast<long>(m) * q + d - 1, d);
  report.rhs = 0;
  for (const auto& lambda : partitions_of(d))
    report.rhs += schur_dim(lambda, m) * schur_dim(lambda, q);
  report.equal = report.lhs == report.rhs;
  return report;
}

namespace {

// Backtracking enumeration of LR skew tableaux of shape nu/lambda with
// content mu: semistandard filling whose reverse reading word (right to left,
// top to bottom) is a lattice word.
struct LrCounter {
  const Partition& lambda;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::vector<int>> fill;  // fill[r][c] for lambda_r <= c < nu_r
  std::vector<int> used;               // how many of each value placed
  long count = 0;

  LrCounter(const Partition& l, const Partition& m, const Partition& n)
      : lambda(l), mu(m), nu(n) {
    fill.resize(static_cast<size_t>(nu.length()));
    for (int r = 0; r < nu.length(); ++r)
      fill[static_cast<size_t>(r)].assign(static_cast<size_t>(nu.part(r)), 0);
    used.assign(static_cast<size_t>(mu.length()) + 1, 0);
  }

  int value_at(int r, int c) const {
    if (r < 0 || c < lambda.part(r)) return 0;
    return fill[static_cast<size_t>(r)][static_cast<size_t>(c)];
  }

  void place(int r, int c) {
    // Advance to next cell in reverse reading order: rows top to bottom,
    // right to left within a row.
    while (r < nu.length() && (nu.part(r) == lambda.part(r) || c < lambda.part(r))) {
      ++r;
      c = r < nu.length() ? nu.part(r) - 1 : 0;
    }
    if (r == nu.length()) {
      ++count;
      return;
    }
    int above = value_at(r - 1, c);
    int right = c + 1 < nu.part(r) ? value_at(r, c + 1) : 0;
    for (int v = 1; v <= mu.length(); ++v) {
      if (used[static_cast<size_t>(v)] >= mu.part(v - 1)) continue;
      if (v <= above) continue;                 // columns strictly increase
      if (right != 0 && v > right) continue;    // rows weakly increase
      if (v > 1 && used[static_cast<size_t>(v)] >= used[static_cast<size_t>(v - 1)])
        continue;                               // lattice condition
      fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      ++used[static_cast<size_t>(v)];
      if (c > lambda.part(r))
        place(r, c - 1);
      else
        place(r + 1, r + 1 < nu.length() ? nu.part(r + 1) - 1 : 0);
      --used[static_cast<size_t>(v)];
      fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
    }
  }

  long run() {
    place(0, nu.length() > 0 ? nu.part(0) - 1 : 0);
    return count;
  }
};

}  // namespace

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  if (!nu.contains(lambda)) return 0;
  if (mu.size() == 0) return 1;  // nu == lambda at this point
  LrCounter counter(lambda, mu, nu);
  return counter.run();
}

ObstructionReport obstruction_check(int n, int dprime_max) {
  if (n < 2 || dprime_max < 0)
    throw std::invalid_argument("obstruction_check: need n >= 2, dprime_max >= 0");
  ObstructionReport report;
  report.n = n;
  report.dprime_max = dprime_max;
  // (a) 1^(n^2-n+1) has first part 1 < n.
  report.column_first_part_below_n = 1 < n;
  // (b) every mu in S^(n) * S^nu has mu_1 >= n.
  report.all_products_contain_row_n = true;
  Partition row_n = Partition::of({n});
  for (int d = 0; d <= dprime_max; ++d) {
    for (const auto& nu : partitions_of(d)) {
      for (const auto& mu : partitions_of(n + d)) {
        ++report.triples_checked;
        if (lr_coefficient(row_n, nu, mu) > 0) {
          ++report.positive_coefficients;
          if (mu.part(0) < n) report.all_products_contain_row_n = false;
        }
      }
    }
  }
  report.ok = report.column_first_part_below_n && report.all_products_contain_row_n;
  return report;
}

}  // namespace degmat

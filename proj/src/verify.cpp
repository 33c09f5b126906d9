#include "degmat/verify.hpp"

#include <stdexcept>

#include "degmat/sampling.hpp"

namespace degmat {

VanishReport vanish_check(std::span<const Poly> polys, const Tensor& T) {
  VanishReport report;
  if (polys.empty()) return report;
  const PolyRing* ring = nullptr;
  for (const auto& p : polys)
    if (p.ring()) {
      ring = p.ring().get();
      break;
    }
  if (!ring) return report;  // all zero polynomials
  std::vector<Rat> values = T.variable_values(*ring);
  for (size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].evaluate(values) != 0) {
      report.all_vanish = false;
      report.failing_index = i;
      return report;
    }
  }
  return report;
}

PolySpan degreewise_span(const RingPtr& ring, std::span<const Poly> F, int d_target) {
  PolySpan span(ring);
  for (const auto& g : F) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      throw std::invalid_argument("degreewise membership: non-homogeneous generator");
    int dg = *g.degree();
    if (dg > d_target) continue;
    for (const auto& mono : monomials_of_degree(*ring, d_target - dg))
      span.insert(g.mul_term(Rat(1), mono));
  }
  return span;
}

bool degreewise_membership(const Poly& f, std::span<const Poly> F, int d_target) {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous() || *f.degree() != d_target)
    throw std::invalid_argument("degreewise membership: query must be homogeneous of d_target");
  PolySpan span = degreewise_span(f.ring(), F, d_target);
  return span.contains(f);
}

DitVerdict dit_random(const Tensor& T, int trials, uint64_t seed, long coeff_bound) {
  if (trials < 1) throw std::invalid_argument("dit_random: need trials >= 1");
  DitVerdict verdict;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<long> lambda(static_cast<size_t>(T.m));
    for (auto& l : lambda) l = rng.uniform(-coeff_bound, coeff_bound);
    QMat combo = QMat::zero(T.n, T.n);
    for (int i = 0; i < T.m; ++i) {
      if (lambda[static_cast<size_t>(i)] == 0) continue;
      Rat c(lambda[static_cast<size_t>(i)]);
      for (int r = 0; r < T.n; ++r)
        for (int cidx = 0; cidx < T.n; ++cidx)
          combo.at(r, cidx) += c * T.slices[static_cast<size_t>(i)].at(r, cidx);
    }
    if (det_exact(combo) != 0) {
      verdict.all_singular = false;
      verdict.witness = std::move(lambda);
      return verdict;
    }
  }
  return verdict;
}

}  // namespace degmat

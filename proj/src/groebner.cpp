#include "degmat/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace degmat {

namespace {

struct LeadInfo {
  const Monomial* lm;
  uint64_t mask;
  Rat lc_inv;
  const Poly* g;
};

std::vector<LeadInfo> make_leads(std::span<const Poly> G) {
  std::vector<LeadInfo> leads;
  leads.reserve(G.size());
  for (const auto& g : G) {
    if (g.is_zero()) throw std::invalid_argument("groebner: zero element in basis");
    leads.push_back({&g.leading_monomial(), g.leading_monomial().support(),
                     Rat(1 / g.leading_coeff()), &g});
  }
  return leads;
}

const RingPtr& basis_ring(std::span<const Poly> G) {
  if (G.empty()) throw std::invalid_argument("groebner: empty basis");
  const RingPtr* ring = nullptr;
  for (const auto& g : G) {
    if (!g.ring()) continue;
    if (!ring) {
      ring = &g.ring();
    } else if (!(*ring)->compatible(*g.ring())) {
      throw std::invalid_argument("groebner: ring mismatch in basis");
    }
  }
  if (!ring) throw std::invalid_argument("groebner: basis has no ring");
  return *ring;
}

// Division loop shared by normal_form and the checkers. Returns the
// remainder's term list (canonical by construction).
std::vector<Term> divide(const RingPtr& ring, std::vector<Term> h,
                         const std::vector<LeadInfo>& leads) {
  const int nv = ring->nvars();
  std::vector<Term> remainder;
  std::vector<Term> merged;
  size_t start = 0;
  while (start < h.size()) {
    const Term& lt = h[start];
    const LeadInfo* div = nullptr;
    const uint64_t support = lt.mono.support();
    for (const auto& L : leads) {
      if ((L.mask & ~support) == 0 && Monomial::divides(*L.lm, lt.mono)) {
        div = &L;
        break;
      }
    }
    if (!div) {
      remainder.push_back(std::move(h[start]));
      ++start;
      continue;
    }
    const Rat factor = lt.coeff * div->lc_inv;
    const Monomial mu = Monomial::quotient(lt.mono, *div->lm);
    const auto tail = div->g->terms().subspan(1);
    merged.clear();
    merged.reserve(h.size() - start + tail.size());
    size_t i = start + 1, j = 0;
    Monomial gm;
    bool gm_valid = false;
    while (i < h.size() && j < tail.size()) {
      if (!gm_valid) {
        gm = Monomial::mul(tail[j].mono, mu);
        gm_valid = true;
      }
      auto cmp = Monomial::compare(h[i].mono, gm, nv);
      if (cmp == std::strong_ordering::greater) {
        merged.push_back(std::move(h[i++]));
      } else if (cmp == std::strong_ordering::less) {
        merged.push_back({gm, -(factor * tail[j].coeff)});
        ++j;
        gm_valid = false;
      } else {
        Rat c = h[i].coeff - factor * tail[j].coeff;
        if (c != 0) merged.push_back({h[i].mono, std::move(c)});
        ++i;
        ++j;
        gm_valid = false;
      }
    }
    while (i < h.size()) merged.push_back(std::move(h[i++]));
    while (j < tail.size()) {
      merged.push_back({Monomial::mul(tail[j].mono, mu), -(factor * tail[j].coeff)});
      ++j;
    }
    h.swap(merged);
    start = 0;
  }
  return remainder;
}

}  // namespace

Poly s_polynomial(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s_polynomial: zero input");
  const RingPtr& ring = common_ring(f, g);
  const Monomial lcm = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Poly a = f.mul_term(1 / f.leading_coeff(), Monomial::quotient(lcm, f.leading_monomial()));
  Poly b = g.mul_term(1 / g.leading_coeff(), Monomial::quotient(lcm, g.leading_monomial()));
  (void)ring;
  return a - b;
}

Poly normal_form(const Poly& f, std::span<const Poly> G) {
  const RingPtr& ring = basis_ring(G);
  if (f.ring() && !ring->compatible(*f.ring()))
    throw std::invalid_argument("normal_form: ring mismatch");
  if (f.is_zero()) return Poly::zero(ring);
  auto leads = make_leads(G);
  std::vector<Term> h(f.terms().begin(), f.terms().end());
  return Poly::from_sorted_terms(ring, divide(ring, std::move(h), leads));
}

BasisCheckResult is_groebner_basis(std::span<const Poly> G, const GbCheckOptions& opts) {
  const RingPtr& ring = basis_ring(G);
  auto leads = make_leads(G);
  const size_t n = G.size();
  const uint64_t total = static_cast<uint64_t>(n) * (n - 1) / 2;

  // Global index of pair (i, j), i < j, lexicographic in (i, j).
  auto index_of_pair = [n](size_t i, size_t j) {
    return static_cast<uint64_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
  };

  // Reduces the S-polynomial of pair (i, j); returns the remainder terms.
  auto reduce_pair = [&](size_t i, size_t j) {
    Poly s = s_polynomial(*leads[i].g, *leads[j].g);
    if (s.is_zero()) return std::vector<Term>{};
    std::vector<Term> h(s.terms().begin(), s.terms().end());
    return divide(ring, std::move(h), leads);
  };

  int threads = opts.threads;
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;

  std::atomic<size_t> next_row{0};
  std::atomic<uint64_t> first_fail{UINT64_MAX};

  auto worker = [&]() {
    while (true) {
      size_t i = next_row.fetch_add(1);
      if (i + 1 >= n) break;
      uint64_t k = index_of_pair(i, i + 1);
      if (k > first_fail.load(std::memory_order_relaxed)) continue;
      for (size_t j = i + 1; j < n; ++j, ++k) {
        if (k > first_fail.load(std::memory_order_relaxed)) break;
        if (Monomial::coprime(*leads[i].lm, *leads[j].lm)) {
          if (!opts.verify_skipped_pairs) continue;
          if (!reduce_pair(i, j).empty())
            throw std::logic_error(
                "product criterion unsound: coprime pair with nonzero remainder");
          continue;
        }
        if (!reduce_pair(i, j).empty()) {
          uint64_t cur = first_fail.load();
          while (k < cur && !first_fail.compare_exchange_weak(cur, k)) {
          }
        }
      }
    }
  };

  if (threads == 1 || total < 64) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Counters are reconstructed sequentially so they do not depend on thread
  // interleaving: they reflect a sequential run stopping at the first failure.
  BasisCheckResult result;
  const uint64_t fail = first_fail.load();
  const uint64_t upto = fail == UINT64_MAX ? total : fail;
  uint64_t skipped = 0;
  uint64_t k = 0;
  for (size_t i = 0; i + 1 < n && k < upto; ++i)
    for (size_t j = i + 1; j < n && k < upto; ++j, ++k)
      if (Monomial::coprime(*leads[i].lm, *leads[j].lm)) ++skipped;
  result.pairs_skipped_by_criterion = skipped;
  result.pairs_examined = upto - skipped;
  if (fail == UINT64_MAX) {
    result.is_basis = true;
  } else {
    result.is_basis = false;
    result.pairs_examined += 1;
    size_t fi = 0;
    uint64_t base = 0;
    while (base + (n - fi - 1) <= fail) {
      base += n - fi - 1;
      ++fi;
    }
    size_t fj = fi + 1 + static_cast<size_t>(fail - base);
    result.failing_pair =
        FailingPair{fi, fj, Poly::from_sorted_terms(ring, reduce_pair(fi, fj))};
  }
  return result;
}

GroebnerBasis buchberger(std::vector<Poly> F, const BuchbergerOptions& opts) {
  if (F.empty()) throw std::invalid_argument("buchberger: empty input");
  const RingPtr& ring = basis_ring(F);
  const int nv = ring->nvars();

  std::vector<Poly> basis;
  basis.reserve(F.size());
  for (auto& f : F) {
    if (f.is_zero()) throw std::invalid_argument("buchberger: zero input polynomial");
    Poly monic = f.monic();
    if (std::find(basis.begin(), basis.end(), monic) == basis.end())
      basis.push_back(std::move(monic));
  }

  // Queue keyed by (lcm total degree, i, j). The "solved" set feeds the
  // optional chain criterion.
  using PairKey = std::tuple<int, size_t, size_t>;
  std::set<PairKey> queue;
  std::set<std::pair<size_t, size_t>> solved;
  auto push_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      Monomial lcm = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
      queue.insert({lcm.degree(), i, j});
    }
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  auto chain_criterion_applies = [&](size_t i, size_t j, const Monomial& lcm_ij) {
    for (size_t k = 0; k < basis.size(); ++k) {
      if (k == i || k == j) continue;
      if (!Monomial::divides(basis[k].leading_monomial(), lcm_ij)) continue;
      auto p1 = std::minmax(i, k);
      auto p2 = std::minmax(j, k);
      if (solved.count({p1.first, p1.second}) && solved.count({p2.first, p2.second})) return true;
    }
    return false;
  };

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    solved.insert({i, j});
    const Monomial& lmi = basis[i].leading_monomial();
    const Monomial& lmj = basis[j].leading_monomial();
    if (Monomial::coprime(lmi, lmj)) continue;
    if (opts.use_chain_criterion && chain_criterion_applies(i, j, Monomial::lcm(lmi, lmj)))
      continue;
    Poly s = s_polynomial(basis[i], basis[j]);
    Poly r = normal_form(s, basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    push_pairs_for(basis.size() - 1);
  }

  // Minimalize: keep only elements whose leading monomial is not divisible by
  // another kept one.
  std::vector<size_t> order(basis.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    auto c = Monomial::compare(basis[a].leading_monomial(), basis[b].leading_monomial(), nv);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return a < b;
  });
  std::vector<Poly> minimal;
  for (size_t idx : order) {
    bool redundant = false;
    for (const auto& kept : minimal)
      if (Monomial::divides(kept.leading_monomial(), basis[idx].leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(basis[idx]);
  }

  // Tail reduction; leading monomials are now pairwise non-divisible so one
  // in-place pass fully reduces every element.
  for (size_t i = 0; i < minimal.size() && minimal.size() > 1; ++i) {
    std::vector<Poly> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = normal_form(minimal[i], others);
    minimal[i] = r.monic();
  }

  GroebnerBasis out;
  out.generators = std::move(minimal);
  out.reduced = true;
  return out;
}

bool leading_ideal_squarefree(const GroebnerBasis& G) {
  for (const auto& g : G.generators)
    if (!g.leading_monomial().squarefree()) return false;
  return true;
}

}  // namespace degmat

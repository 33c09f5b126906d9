#include <doctest.h>

#include "degmat/groebner.hpp"
#include "degmat/sampling.hpp"

using namespace degmat;

namespace {

// Two scalar variables x > y realized as 1x1 slices.
struct XY {
  RingPtr ring = make_ring(1, 2);
  Poly x = Poly::variable(ring, VarId{1, 1, 1});
  Poly y = Poly::variable(ring, VarId{2, 1, 1});
  Poly one = Poly::constant(ring, Rat(1));
};

Poly random_poly(const RingPtr& ring, Rng& rng, int max_terms, int max_deg) {
  std::vector<Term> terms;
  long nterms = rng.uniform(1, max_terms);
  for (long t = 0; t < nterms; ++t) {
    Monomial m;
    long deg = rng.uniform(0, max_deg);
    for (long d = 0; d < deg; ++d) {
      int idx = static_cast<int>(rng.uniform(0, ring->nvars() - 1));
      m.set_exponent(idx, m.exponent(idx) + 1);
    }
    terms.push_back({m, rng.rational(4, 2)});
  }
  return Poly::from_terms(ring, std::move(terms));
}

}  // namespace

TEST_CASE("s-polynomial definition cases") {
  XY r;
  Poly f = r.x * r.x - r.y;   // x^2 - y
  Poly g = r.x * r.y - r.one; // xy - 1

  CHECK(s_polynomial(f, g) == r.x - r.y * r.y);
  CHECK(s_polynomial(f, f).is_zero());
  CHECK(s_polynomial(r.x * r.x, r.y * r.y).is_zero());
  CHECK_THROWS_AS(s_polynomial(f, Poly::zero(r.ring)), std::invalid_argument);
}

TEST_CASE("normal form: division examples") {
  XY r;
  Poly f = r.x * r.x - r.y;
  CHECK(normal_form(r.x * r.x * r.y, {&f, 1}) == r.y * r.y);

  Rng rng(3);
  std::vector<Poly> G{r.x * r.y - r.one};
  for (int trial = 0; trial < 25; ++trial) {
    Poly h = random_poly(r.ring, rng, 4, 3);
    CHECK(normal_form(h * G[0], G).is_zero());
  }
}

TEST_CASE("buchberger criterion check: classic failure and trivial success") {
  XY r;
  Poly f = r.x * r.x - r.y;
  Poly g = r.x * r.y - r.one;
  std::vector<Poly> G{f, g};
  BasisCheckResult check = is_groebner_basis(G);
  CHECK(!check.is_basis);
  REQUIRE(check.failing_pair.has_value());
  CHECK(check.failing_pair->i == 0);
  CHECK(check.failing_pair->j == 1);
  CHECK(check.failing_pair->remainder == r.x - r.y * r.y);
  CHECK(check.pairs_examined == 1);
  CHECK(check.pairs_skipped_by_criterion == 0);

  std::vector<Poly> single{f};
  CHECK(is_groebner_basis(single).is_basis);
}

TEST_CASE("buchberger completes the classic 2-variable instance") {
  XY r;
  // Hand-run: S(x^2-y, xy-1) = x - y^2, irreducible, joins as y^2 - x; the
  // remaining pair (xy-1, y^2-x) reduces to zero. Reduced basis, ascending
  // leading monomials: y^2 - x, xy - 1, x^2 - y.
  GroebnerBasis gb = buchberger({r.x * r.x - r.y, r.x * r.y - r.one});
  REQUIRE(gb.generators.size() == 3);
  CHECK(gb.generators[0] == r.y * r.y - r.x);
  CHECK(gb.generators[1] == r.x * r.y - r.one);
  CHECK(gb.generators[2] == r.x * r.x - r.y);
  CHECK(gb.reduced);
  CHECK(is_groebner_basis(gb.generators).is_basis);

  // Idempotence on an already-reduced basis.
  GroebnerBasis again = buchberger(gb.generators);
  CHECK(again.generators == gb.generators);
}

TEST_CASE("leading ideal squarefree detection") {
  XY r;
  GroebnerBasis a;
  a.generators = {r.x * r.x - r.y};
  CHECK(!leading_ideal_squarefree(a));
  GroebnerBasis b;
  b.generators = {r.x * r.y - r.one};
  CHECK(leading_ideal_squarefree(b));
}

TEST_CASE("buchberger output verifies on random small inputs") {
  RingPtr ring = make_ring(2, 1);  // 4 variables
  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Poly> F;
    long count = rng.uniform(1, 4);
    for (long i = 0; i < count; ++i) {
      Poly f = random_poly(ring, rng, 3, 3);
      if (!f.is_zero()) F.push_back(f);
    }
    if (F.empty()) continue;
    GroebnerBasis gb = buchberger(F);
    GbCheckOptions opts;
    opts.verify_skipped_pairs = true;  // product-criterion soundness spot check
    CHECK(is_groebner_basis(gb.generators, opts).is_basis);
    // every input reduces to zero against its own basis
    for (const auto& f : F) CHECK(normal_form(f, gb.generators).is_zero());
    // random explicit combinations lie in the ideal
    for (int c = 0; c < 3; ++c) {
      Poly combo = Poly::zero(ring);
      for (const auto& f : F) combo = combo + random_poly(ring, rng, 2, 2) * f;
      CHECK(normal_form(combo, gb.generators).is_zero());
    }
  }
}

TEST_CASE("normal form is linear against a verified basis") {
  XY r;
  GroebnerBasis gb = buchberger({r.x * r.x - r.y, r.x * r.y - r.one});
  Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    Poly f = random_poly(r.ring, rng, 4, 4);
    Poly g = random_poly(r.ring, rng, 4, 4);
    Poly lhs = normal_form(f + g, gb.generators);
    Poly rhs = normal_form(normal_form(f, gb.generators) + normal_form(g, gb.generators),
                           gb.generators);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("chain criterion does not change buchberger results") {
  RingPtr ring = make_ring(2, 1);
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Poly> F;
    long count = rng.uniform(2, 4);
    for (long i = 0; i < count; ++i) {
      Poly f = random_poly(ring, rng, 3, 2);
      if (!f.is_zero()) F.push_back(f);
    }
    if (F.empty()) continue;
    BuchbergerOptions with_chain;
    with_chain.use_chain_criterion = true;
    GroebnerBasis a = buchberger(F);
    GroebnerBasis b = buchberger(F, with_chain);
    CHECK(a.generators == b.generators);
  }
}

TEST_CASE("parallel groebner check matches sequential") {
  XY r;
  std::vector<Poly> G{r.x * r.x - r.y, r.x * r.y - r.one, r.y * r.y - r.x};
  GbCheckOptions seq;
  seq.threads = 1;
  GbCheckOptions par;
  par.threads = 4;
  BasisCheckResult a = is_groebner_basis(G, seq);
  BasisCheckResult b = is_groebner_basis(G, par);
  CHECK(a.is_basis == b.is_basis);
  CHECK(a.pairs_examined == b.pairs_examined);
  CHECK(a.pairs_skipped_by_criterion == b.pairs_skipped_by_criterion);
}

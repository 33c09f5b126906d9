#include <doctest.h>

#include "degmat/poly.hpp"
#include "degmat/poly_matrix.hpp"
#include "degmat/sampling.hpp"

using namespace degmat;

namespace {

Poly var(const RingPtr& ring, int k, int i, int j) {
  return Poly::variable(ring, VarId{k, i, j});
}

Poly det2(const RingPtr& ring, int k) {
  return var(ring, k, 1, 1) * var(ring, k, 2, 2) - var(ring, k, 1, 2) * var(ring, k, 2, 1);
}

Poly random_poly(const RingPtr& ring, Rng& rng, int max_terms = 5, int max_deg = 3) {
  std::vector<Term> terms;
  long nterms = rng.uniform(0, max_terms);
  for (long t = 0; t < nterms; ++t) {
    Monomial m;
    long deg = rng.uniform(0, max_deg);
    for (long d = 0; d < deg; ++d) {
      int idx = static_cast<int>(rng.uniform(0, ring->nvars() - 1));
      m.set_exponent(idx, m.exponent(idx) + 1);
    }
    Rat c = rng.rational(5, 3);
    terms.push_back({m, c});
  }
  return Poly::from_terms(ring, std::move(terms));
}

}  // namespace

TEST_CASE("ring variable layout and total order") {
  RingPtr ring = make_ring(2, 3);
  CHECK(ring->nvars() == 12);
  // Slice 1 entries all precede slice 2 entries, row-major inside a slice.
  CHECK(ring->index_of({1, 1, 1}) == 0);
  CHECK(ring->index_of({1, 1, 2}) == 1);
  CHECK(ring->index_of({1, 2, 1}) == 2);
  CHECK(ring->index_of({1, 2, 2}) == 3);
  CHECK(ring->index_of({2, 1, 1}) == 4);
  CHECK(ring->index_of({3, 2, 2}) == 11);
  for (int idx = 0; idx < ring->nvars(); ++idx) CHECK(ring->index_of(ring->var_at(idx)) == idx);
  CHECK_THROWS_AS(ring->index_of({4, 1, 1}), std::out_of_range);

  RingPtr colmajor = make_ring(2, 1, VarLayout::ColMajor);
  CHECK(colmajor->index_of({1, 2, 1}) == 1);
  CHECK(colmajor->index_of({1, 1, 2}) == 2);
}

TEST_CASE("degrevlex comparisons from the ring m=1, n=2") {
  RingPtr ring = make_ring(2, 1);
  auto mono = [&](std::initializer_list<std::pair<VarId, int>> exps) {
    Monomial m;
    for (auto& [v, e] : exps) m.set_exponent(ring->index_of(v), e);
    return m;
  };
  Monomial x12x21 = mono({{{1, 1, 2}, 1}, {{1, 2, 1}, 1}});
  Monomial x11x22 = mono({{{1, 1, 1}, 1}, {{1, 2, 2}, 1}});
  CHECK(compare_monomials(*ring, x12x21, x11x22) == std::strong_ordering::greater);

  Monomial x11sq = mono({{{1, 1, 1}, 2}});
  Monomial x11x12 = mono({{{1, 1, 1}, 1}, {{1, 1, 2}, 1}});
  CHECK(compare_monomials(*ring, x11sq, x11x12) == std::strong_ordering::greater);

  Monomial x11 = mono({{{1, 1, 1}, 1}});
  Monomial x22cubed = mono({{{1, 2, 2}, 3}});
  CHECK(compare_monomials(*ring, x11, x22cubed) == std::strong_ordering::less);
}

TEST_CASE("monomial order is total, refines degree and is multiplicative") {
  RingPtr ring = make_ring(2, 2);
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    Poly pa = random_poly(ring, rng, 1);
    Poly pb = random_poly(ring, rng, 1);
    Poly pc = random_poly(ring, rng, 1);
    if (pa.is_zero() || pb.is_zero() || pc.is_zero()) continue;
    const Monomial &a = pa.leading_monomial(), &b = pb.leading_monomial(),
                   &c = pc.leading_monomial();
    auto ab = compare_monomials(*ring, a, b);
    if (a.degree() != b.degree())
      CHECK((ab == std::strong_ordering::greater) == (a.degree() > b.degree()));
    if (ab == std::strong_ordering::greater) {
      CHECK(compare_monomials(*ring, Monomial::mul(a, c), Monomial::mul(b, c)) ==
            std::strong_ordering::greater);
    }
    // antisymmetry
    auto ba = compare_monomials(*ring, b, a);
    if (ab == std::strong_ordering::greater) CHECK(ba == std::strong_ordering::less);
    if (ab == std::strong_ordering::equal) CHECK(a == b);
  }
}

TEST_CASE("arithmetic basics") {
  RingPtr ring = make_ring(2, 1);
  Poly x11 = var(ring, 1, 1, 1);
  Poly x22 = var(ring, 1, 2, 2);

  CHECK((x11 + (-x11)).is_zero());
  CHECK((x11 + x22) * (x11 - x22) == x11 * x11 - x22 * x22);

  Poly d = det2(ring, 1);
  CHECK(d.scaled(Rat(3)).leading_monomial() == d.leading_monomial());
  CHECK(d.monic().leading_coeff() == 1);
  CHECK(!d.degree().has_value() == false);
  CHECK(*d.degree() == 2);
  CHECK(!Poly::zero(ring).degree().has_value());
}

TEST_CASE("ring mismatch is rejected") {
  RingPtr a = make_ring(2, 1);
  RingPtr b = make_ring(2, 2);
  CHECK_THROWS_AS(var(a, 1, 1, 1) + var(b, 2, 1, 1), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
  RingPtr ring = make_ring(2, 2);
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Poly f = random_poly(ring, rng);
    Poly g = random_poly(ring, rng);
    Poly h = random_poly(ring, rng);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("evaluation is exact and a ring homomorphism") {
  RingPtr ring = make_ring(2, 2);
  Poly d1 = det2(ring, 1);

  // A1 = identity, A2 = 0: variables x[1][1][1], x[1][2][2] are 1.
  std::vector<Rat> vals(static_cast<size_t>(ring->nvars()), Rat(0));
  vals[0] = 1;
  vals[3] = 1;
  CHECK(d1.evaluate(vals) == 1);

  // A1 = v r^T of rank one.
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Rat v1 = rng.rational(), v2 = rng.rational(), r1 = rng.rational(), r2 = rng.rational();
    std::vector<Rat> rank1(static_cast<size_t>(ring->nvars()), Rat(0));
    rank1[0] = v1 * r1;
    rank1[1] = v1 * r2;
    rank1[2] = v2 * r1;
    rank1[3] = v2 * r2;
    CHECK(d1.evaluate(rank1) == 0);
  }

  // x11^(1) * x22^(2) at A1=[[2,0],[0,0]], A2=[[0,0],[0,5]].
  Poly cross = var(ring, 1, 1, 1) * var(ring, 2, 2, 2);
  std::vector<Rat> cross_vals(static_cast<size_t>(ring->nvars()), Rat(0));
  cross_vals[0] = 2;
  cross_vals[7] = 5;
  CHECK(cross.evaluate(cross_vals) == 10);

  for (int trial = 0; trial < 30; ++trial) {
    Poly f = random_poly(ring, rng);
    Poly g = random_poly(ring, rng);
    std::vector<Rat> pt;
    for (int i = 0; i < ring->nvars(); ++i) pt.push_back(rng.rational());
    CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
    CHECK((f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
  }
}

TEST_CASE("symbolic determinant") {
  RingPtr ring = make_ring(2, 2);
  PolyMatrix M = PolyMatrix::make(ring, 2, 2);
  M.at(0, 0) = var(ring, 1, 1, 1);
  M.at(0, 1) = var(ring, 1, 1, 2);
  M.at(1, 0) = var(ring, 1, 2, 1);
  M.at(1, 1) = var(ring, 1, 2, 2);
  CHECK(determinant(M) == det2(ring, 1));

  // equal rows force zero
  M.at(1, 0) = M.at(0, 0);
  M.at(1, 1) = M.at(0, 1);
  CHECK(determinant(M).is_zero());

  PolyMatrix D = PolyMatrix::make(ring, 3, 3);
  D.at(0, 0) = Poly::constant(ring, Rat(1));
  D.at(1, 1) = Poly::constant(ring, Rat(2));
  D.at(2, 2) = Poly::constant(ring, Rat(3));
  Poly d = determinant(D);
  CHECK(d == Poly::constant(ring, Rat(6)));

  PolyMatrix bad = PolyMatrix::make(ring, 2, 3);
  CHECK_THROWS_AS(determinant(bad), std::invalid_argument);
}

TEST_CASE("determinant is multilinear in rows") {
  RingPtr ring = make_ring(2, 3);
  Rng rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    // row 0 = a*u + b*v, rows 1,2 fixed random linear forms
    PolyMatrix U = PolyMatrix::make(ring, 3, 3);
    PolyMatrix V = PolyMatrix::make(ring, 3, 3);
    Rat a = rng.rational(3, 2), b = rng.rational(3, 2);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        Poly common = Poly::variable(ring, static_cast<int>(rng.uniform(0, 11)));
        U.at(r, c) = common;
        V.at(r, c) = common;
      }
    for (int c = 0; c < 3; ++c) {
      U.at(0, c) = Poly::variable(ring, static_cast<int>(rng.uniform(0, 11)));
      V.at(0, c) = Poly::variable(ring, static_cast<int>(rng.uniform(0, 11)));
    }
    PolyMatrix W = U;
    for (int c = 0; c < 3; ++c) W.at(0, c) = U.at(0, c).scaled(a) + V.at(0, c).scaled(b);
    CHECK(determinant(W) == determinant(U).scaled(a) + determinant(V).scaled(b));
  }
}

TEST_CASE("determinant is multiplicative on random numeric matrices") {
  RingPtr ring = make_ring(2, 1);
  Rng rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    PolyMatrix A = PolyMatrix::make(ring, 3, 3);
    PolyMatrix B = PolyMatrix::make(ring, 3, 3);
    PolyMatrix AB = PolyMatrix::make(ring, 3, 3);
    std::vector<std::vector<Rat>> av(3, std::vector<Rat>(3)), bv(3, std::vector<Rat>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        av[i][j] = rng.rational(5, 2);
        bv[i][j] = rng.rational(5, 2);
        A.at(i, j) = Poly::constant(ring, av[i][j]);
        B.at(i, j) = Poly::constant(ring, bv[i][j]);
      }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Rat sum(0);
        for (int k = 0; k < 3; ++k) sum += av[i][k] * bv[k][j];
        AB.at(i, j) = Poly::constant(ring, sum);
      }
    CHECK(determinant(AB) == determinant(A) * determinant(B));
  }
}

TEST_CASE("minors: counting, dedup, provenance") {
  RingPtr ring = make_ring(2, 3);
  // 3x4 slice flattening style matrix of distinct variables
  PolyMatrix T = PolyMatrix::make(ring, 3, 4);
  for (int k = 1; k <= 3; ++k) {
    T.at(k - 1, 0) = var(ring, k, 1, 1);
    T.at(k - 1, 1) = var(ring, k, 1, 2);
    T.at(k - 1, 2) = var(ring, k, 2, 1);
    T.at(k - 1, 3) = var(ring, k, 2, 2);
  }
  auto m3 = minors_of(T, 3);
  CHECK(m3.size() == 4);
  for (const auto& minor : m3) {
    CHECK(minor.row_set == std::vector<int>{0, 1, 2});
    CHECK(*minor.value.degree() == 3);
  }

  PolyMatrix S = T.submatrix({0, 1, 2}, {0, 1, 2});
  auto full = minors_of(S, 3);
  CHECK(full.size() == 1);
  CHECK(full[0].value == determinant(S));

  // repeated row: the only full-size minor vanishes and is dropped
  PolyMatrix R = PolyMatrix::make(ring, 2, 2);
  R.at(0, 0) = var(ring, 1, 1, 1);
  R.at(0, 1) = var(ring, 1, 1, 2);
  R.at(1, 0) = var(ring, 1, 1, 1);
  R.at(1, 1) = var(ring, 1, 1, 2);
  CHECK(minors_of(R, 2).empty());

  CHECK_THROWS_AS(minors_of(R, 3), std::invalid_argument);
}

TEST_CASE("canonical serialization round-trips") {
  RingPtr ring = make_ring(2, 2);
  CHECK(Poly::zero(ring).to_string() == "0");
  CHECK(Poly::parse(ring, "0").is_zero());

  // The degrevlex leading monomial of a 2x2 determinant is the antidiagonal.
  Poly d = det2(ring, 1);
  CHECK(d.to_string() == "-x[1][1][2]*x[1][2][1] + x[1][1][1]*x[1][2][2]");
  CHECK(Poly::parse(ring, d.to_string()) == d);

  Rng rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    Poly f = random_poly(ring, rng, 6, 4);
    CAPTURE(f.to_string());
    CHECK(Poly::parse(ring, f.to_string()) == f);
  }

  Poly c = Poly::constant(ring, make_rat(-3, 7));
  CHECK(c.to_string() == "-3/7");
  CHECK(Poly::parse(ring, c.to_string()) == c);
}

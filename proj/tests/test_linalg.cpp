#include <doctest.h>

#include "degmat/linalg.hpp"
#include "degmat/sampling.hpp"

using namespace degmat;

TEST_CASE("exact determinant, rank, inverse") {
  QMat M = QMat::zero(2, 2);
  M.at(0, 0) = make_rat(1, 2);
  M.at(0, 1) = 3;
  M.at(1, 0) = -2;
  M.at(1, 1) = 4;
  CHECK(det_exact(M) == make_rat(1, 2) * 4 - Rat(3) * Rat(-2));
  CHECK(rank_exact(M) == 2);
  CHECK(is_invertible(M));

  QMat inv = inverse(M);
  QMat prod = M * inv;
  CHECK(prod == QMat::identity(2));

  QMat S = QMat::zero(3, 3);
  S.at(0, 0) = 1;
  S.at(1, 0) = 2;  // rank 1
  CHECK(det_exact(S) == 0);
  CHECK(rank_exact(S) == 1);
  CHECK(!is_invertible(S));
  CHECK_THROWS_AS(inverse(S), std::invalid_argument);
}

TEST_CASE("random matrices: det multiplicativity and inverse round trip") {
  Rng rng(91);
  for (int trial = 0; trial < 20; ++trial) {
    QMat A = random_invertible(3, rng);
    QMat B = random_invertible(3, rng);
    CHECK(det_exact(A * B) == det_exact(A) * det_exact(B));
    CHECK(A * inverse(A) == QMat::identity(3));
  }
}

TEST_CASE("poly span rank and membership") {
  RingPtr ring = make_ring(2, 1);
  Poly a = Poly::variable(ring, VarId{1, 1, 1});
  Poly b = Poly::variable(ring, VarId{1, 1, 2});
  Poly c = Poly::variable(ring, VarId{1, 2, 1});

  PolySpan span(ring);
  CHECK(span.insert(a + b));
  CHECK(span.insert(b + c));
  CHECK(!span.insert(a - c));  // dependent: (a+b) - (b+c)
  CHECK(span.rank() == 2);
  CHECK(span.contains(a + b.scaled(Rat(2)) + c));  // (a+b)+(b+c)
  CHECK(!span.contains(a));
  CHECK(span.contains(Poly::zero(ring)));
}

TEST_CASE("poly span rank equals dense rank on random data") {
  RingPtr ring = make_ring(2, 1);
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    // random degree-1 polys = random vectors in 4-dim space
    std::vector<Poly> vecs;
    QMat dense = QMat::zero(6, 4);
    for (int v = 0; v < 6; ++v) {
      Poly p = Poly::zero(ring);
      for (int i = 0; i < 4; ++i) {
        Rat coeff = rng.rational(3, 1);
        dense.at(v, i) = coeff;
        p = p + Poly::variable(ring, i).scaled(coeff);
      }
      vecs.push_back(p);
    }
    PolySpan span(ring);
    for (const auto& p : vecs) span.insert(p);
    CHECK(static_cast<int>(span.rank()) == rank_exact(dense));
  }
}

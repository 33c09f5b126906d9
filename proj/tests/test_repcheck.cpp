#include <doctest.h>

#include "degmat/repcheck.hpp"

using namespace degmat;

TEST_CASE("partition validation and parsing") {
  CHECK(Partition::of({3, 2, 1}).size() == 6);
  CHECK(Partition::of({}).size() == 0);
  CHECK(Partition::parse("3,2,1") == Partition::of({3, 2, 1}));
  CHECK(Partition::parse("") == Partition::of({}));
  CHECK_THROWS_AS(Partition::of({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::of({0}), std::invalid_argument);
  CHECK(Partition::of({2, 2}).contains(Partition::of({2, 1})));
  CHECK(!Partition::of({2, 2}).contains(Partition::of({3})));
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("schur dimensions via hook content") {
  // exterior powers
  for (int q = 1; q <= 6; ++q)
    for (int k = 1; k <= q; ++k) {
      std::vector<int> col(static_cast<size_t>(k), 1);
      CHECK(schur_dim(Partition::of(col), q) == binomial(q, k));
    }
  // symmetric powers
  for (int q = 1; q <= 6; ++q)
    for (int d = 1; d <= 5; ++d)
      CHECK(schur_dim(Partition::of({d}), q) == binomial(q + d - 1, d));

  CHECK(schur_dim(Partition::of({2, 1}), 3) == 8);
  CHECK(schur_dim(Partition::of({1, 1, 1}), 2) == 0);  // more parts than q
  CHECK(schur_dim(Partition::of({}), 4) == 1);

  // dimension vanishes exactly when the diagram has more than q rows
  for (int d = 1; d <= 6; ++d)
    for (const auto& lam : partitions_of(d))
      for (int q = 0; q <= 5; ++q)
        CHECK((schur_dim(lam, q) == 0) == (lam.length() > q));
}

TEST_CASE("cauchy identity dimension check") {
  CauchyReport r222 = cauchy_check(2, 2, 2);
  CHECK(r222.equal);
  CHECK(r222.lhs == 10);

  CauchyReport r322 = cauchy_check(3, 2, 2);
  CHECK(r322.equal);
  CHECK(r322.lhs == 20);

  CauchyReport r224 = cauchy_check(2, 2, 4);
  CHECK(r224.equal);
  CHECK(r224.lhs == 36);

  for (int d = 1; d <= 5; ++d)
    for (int m = 1; m <= 6; ++m)
      for (int q = 1; q <= 6; ++q) CHECK(cauchy_check(d, m, q).equal);
}

TEST_CASE("littlewood-richardson coefficients") {
  CHECK(lr_coefficient(Partition::of({2}), Partition::of({1}), Partition::of({2, 1})) == 1);
  CHECK(lr_coefficient(Partition::of({1, 1}), Partition::of({1, 1}),
                       Partition::of({1, 1, 1, 1})) == 1);
  CHECK(lr_coefficient(Partition::of({2, 1}), Partition::of({2, 1}),
                       Partition::of({3, 2, 1})) == 2);

  // size mismatch and non-containment give zero
  CHECK(lr_coefficient(Partition::of({2}), Partition::of({1}), Partition::of({2})) == 0);
  CHECK(lr_coefficient(Partition::of({2}), Partition::of({1}), Partition::of({1, 1, 1})) == 0);

  // trivial multiplications
  CHECK(lr_coefficient(Partition::of({}), Partition::of({2, 1}), Partition::of({2, 1})) == 1);
  CHECK(lr_coefficient(Partition::of({2, 1}), Partition::of({}), Partition::of({2, 1})) == 1);
}

TEST_CASE("LR symmetry on small triples") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (const auto& lam : partitions_of(a))
        for (const auto& mu : partitions_of(b))
          for (const auto& nu : partitions_of(a + b))
            CHECK(lr_coefficient(lam, mu, nu) == lr_coefficient(mu, lam, nu));
}

TEST_CASE("LR coefficients against the product-dimension identity") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (const auto& lam : partitions_of(a))
        for (const auto& mu : partitions_of(b))
          for (int q = 1; q <= 4; ++q) {
            Int lhs = schur_dim(lam, q) * schur_dim(mu, q);
            Int rhs(0);
            for (const auto& nu : partitions_of(a + b))
              rhs += Int(lr_coefficient(lam, mu, nu)) * schur_dim(nu, q);
            CHECK(lhs == rhs);
          }
}

TEST_CASE("obstruction check") {
  ObstructionReport r2 = obstruction_check(2, 4);
  CHECK(r2.ok);
  CHECK(r2.column_first_part_below_n);
  CHECK(r2.all_products_contain_row_n);
  CHECK(r2.positive_coefficients > 0);

  ObstructionReport r3 = obstruction_check(3, 3);
  CHECK(r3.ok);

  CHECK_THROWS_AS(obstruction_check(1, 2), std::invalid_argument);
}

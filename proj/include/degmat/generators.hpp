#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "degmat/poly_matrix.hpp"
#include "degmat/sampling.hpp"

namespace degmat {

enum class Family { Quadric, BlockCubic, QuarticProduct, FanoMinor, ProductEquation };

const char* family_name(Family f);

// One generator family; family and params reconstruct the set
// deterministically, elements are nonzero and canonical.
struct GeneratorSet {
  Family family = Family::Quadric;
  int n = 0;
  int m = 0;
  std::vector<Poly> elements;
  std::vector<std::string> provenance;  // parallel to elements
};

enum class FlatteningMode { Slice, RowSide, ColSide };

// Slice: m x n^2, row k lists X^(k) in row-major order.
// RowSide: n x (m n), row i concatenates row i of X^(1),...,X^(m).
// ColSide: n x (m n), row i concatenates column i of X^(1),...,X^(m).
PolyMatrix flattening(const RingPtr& ring, FlatteningMode mode);

// Coefficient polynomials of every degree-n lambda monomial in the expansion
// of det(lambda_1 X_1 + ... + lambda_m X_m). For n = 2 this is exactly
// {det X_i} together with det(X_i+X_j) - det X_i - det X_j for i < j.
GeneratorSet det_pencil_generators(const RingPtr& ring);

// n = 2 only: all 3x3 minors of [[X_i, X_j], [X_k, 0]] over ordered
// pairwise-distinct triples (i, j, k), deduplicated. Empty for m < 3.
GeneratorSet block_cubics(const RingPtr& ring);

// n = 2 only: with T the slice flattening and G_ab the 2x2 minors of the
// column pair (a, b) of T, the products G12*G24 and G13*G34, deduplicated.
GeneratorSet quartic_products(const RingPtr& ring);

// Quadrics ++ block cubics ++ quartic products, each monic, deduplicated,
// in family order then construction order. n = 2 only.
std::vector<Poly> candidate_basis(const RingPtr& ring);

// All minors of size n^2-n+1 of the slice flattening; empty when m is too
// small for that size.
GeneratorSet fano_minors(const RingPtr& ring);

// Lazily indexable family of products g*h*k with g among the minors of size
// n^2-2n+3 of the slice flattening and h, k maximal minors of the two side
// flattenings. Each product is homogeneous of degree n^2+3. The full set is
// combinatorially huge, so items are materialized on demand.
class ProductEquationStream {
 public:
  explicit ProductEquationStream(RingPtr ring);

  // False when m < n^2-2n+3 and the stream is empty.
  bool meets_bound() const { return meets_bound_; }
  bool empty() const { return total_count() == 0; }
  uint64_t total_count() const {
    return static_cast<uint64_t>(jm_.size()) * j1_.size() * j2_.size();
  }

  const std::vector<Poly>& jm() const { return jm_; }
  const std::vector<Poly>& j1() const { return j1_; }
  const std::vector<Poly>& j2() const { return j2_; }

  struct Item {
    size_t gi, hi, ki;
  };

  Item item_at(uint64_t flat_index) const;
  Item sample(Rng& rng) const;

  const Poly& factor_m(const Item& it) const { return jm_[it.gi]; }
  const Poly& factor_1(const Item& it) const { return j1_[it.hi]; }
  const Poly& factor_2(const Item& it) const { return j2_[it.ki]; }

  Poly product(const Item& it) const;
  int product_degree() const;

 private:
  RingPtr ring_;
  bool meets_bound_ = false;
  std::vector<Poly> jm_, j1_, j2_;
};

}  // namespace degmat

#pragma once

#include <compare>
#include <memory>
#include <string>

namespace degmat {

// Order of the variables inside one matrix slice. The block order across
// slices is fixed (all entries of X^(1) greater than all entries of X^(2),
// and so on); the within-slice order is a knob so that verification can be
// re-run under alternate orders.
enum class VarLayout { RowMajor, ColMajor };

// One indeterminate x_{ij}^{(k)}: slice k in 1..m, row i and column j in 1..n.
struct VarId {
  int slice;
  int row;
  int col;
  friend bool operator==(const VarId&, const VarId&) = default;
};

// The polynomial ring Q[x_{ij}^{(k)}] with a graded reverse lexicographic
// order. Variable index 0 is the greatest variable.
class PolyRing {
 public:
  // Support masks and exponent storage cap the variable count.
  static constexpr int kMaxVars = 64;

  PolyRing(int n, int m, VarLayout layout = VarLayout::RowMajor);

  int n() const { return n_; }
  int m() const { return m_; }
  int nvars() const { return nvars_; }
  VarLayout layout() const { return layout_; }

  int index_of(VarId v) const;
  VarId var_at(int index) const;
  std::string var_name(int index) const;
  std::string order_description() const;

  bool compatible(const PolyRing& other) const {
    return n_ == other.n_ && m_ == other.m_ && layout_ == other.layout_;
  }

 private:
  int n_;
  int m_;
  int nvars_;
  VarLayout layout_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(int n, int m, VarLayout layout = VarLayout::RowMajor);

}  // namespace degmat

#include "degmat/ring.hpp"

#include <stdexcept>

namespace degmat {

PolyRing::PolyRing(int n, int m, VarLayout layout) : n_(n), m_(m), layout_(layout) {
  if (n < 1 || m < 1) throw std::invalid_argument("PolyRing: need n >= 1, m >= 1");
  if (m * n * n > kMaxVars)
    throw std::invalid_argument("PolyRing: m*n^2 exceeds the supported variable count");
  nvars_ = m * n * n;
}

int PolyRing::index_of(VarId v) const {
  if (v.slice < 1 || v.slice > m_ || v.row < 1 || v.row > n_ || v.col < 1 || v.col > n_)
    throw std::out_of_range("PolyRing::index_of: variable outside ring bounds");
  int pos = layout_ == VarLayout::RowMajor ? (v.row - 1) * n_ + (v.col - 1)
                                           : (v.col - 1) * n_ + (v.row - 1);
  return (v.slice - 1) * n_ * n_ + pos;
}

VarId PolyRing::var_at(int index) const {
  if (index < 0 || index >= nvars_) throw std::out_of_range("PolyRing::var_at: bad index");
  int slice = index / (n_ * n_) + 1;
  int pos = index % (n_ * n_);
  int a = pos / n_ + 1;
  int b = pos % n_ + 1;
  return layout_ == VarLayout::RowMajor ? VarId{slice, a, b} : VarId{slice, b, a};
}

std::string PolyRing::var_name(int index) const {
  VarId v = var_at(index);
  return "x[" + std::to_string(v.slice) + "][" + std::to_string(v.row) + "][" +
         std::to_string(v.col) + "]";
}

std::string PolyRing::order_description() const {
  return "degrevlex, slices descending, within-slice " +
         std::string(layout_ == VarLayout::RowMajor ? "row-major" : "column-major") +
         ", n=" + std::to_string(n_) + ", m=" + std::to_string(m_);
}

RingPtr make_ring(int n, int m, VarLayout layout) {
  return std::make_shared<PolyRing>(n, m, layout);
}

}  // namespace degmat

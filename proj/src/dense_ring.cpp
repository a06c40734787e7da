#include "idemquat/dense_ring.hpp"

namespace idemquat {

DenseRing::DenseRing(const Ring& R) : ring_(R) {
  if (R.size() > kMaxSize)
    throw Error(Errc::CapExceeded, R.describe() + " has more than " + std::to_string(kMaxSize) +
                                       " elements; dense tables unavailable");
  size_ = static_cast<std::uint32_t>(R.size());
  const auto elems = R.elements();
  one_ = static_cast<Index>(R.index_of(R.one()));
  add_.resize(std::size_t{size_} * size_);
  mul_.resize(std::size_t{size_} * size_);
  neg_.resize(size_);
  inv_.resize(size_, 0);
  unit_.resize(size_, 0);
  for (std::uint32_t a = 0; a < size_; ++a) {
    for (std::uint32_t b = 0; b < size_; ++b) {
      add_[a * size_ + b] = static_cast<Index>(R.index_of(R.add(elems[a], elems[b])));
      mul_[a * size_ + b] = static_cast<Index>(R.index_of(R.mul(elems[a], elems[b])));
    }
    neg_[a] = static_cast<Index>(R.index_of(R.neg(elems[a])));
    unit_[a] = R.is_unit(elems[a]) ? 1 : 0;
  }
  for (std::uint32_t a = 0; a < size_; ++a) {
    if (!unit_[a]) continue;
    for (std::uint32_t b = 0; b < size_; ++b) {
      if (mul_[a * size_ + b] == one_) {
        inv_[a] = static_cast<Index>(b);
        break;
      }
    }
  }
}

Quad Carrier::from_mat(const Mat2& A) const {
  const Ring& R = D_.ring();
  return {static_cast<DenseRing::Index>(R.index_of(A.e11)), static_cast<DenseRing::Index>(R.index_of(A.e12)),
          static_cast<DenseRing::Index>(R.index_of(A.e21)), static_cast<DenseRing::Index>(R.index_of(A.e22))};
}

Mat2 Carrier::to_mat(const Quad& x) const {
  const Ring& R = D_.ring();
  return {R.element_at(x[0]), R.element_at(x[1]), R.element_at(x[2]), R.element_at(x[3])};
}

Quad Carrier::from_quat(const Quaternion& x) const {
  const Ring& R = D_.ring();
  return {static_cast<DenseRing::Index>(R.index_of(x.c1)), static_cast<DenseRing::Index>(R.index_of(x.ci)),
          static_cast<DenseRing::Index>(R.index_of(x.cj)), static_cast<DenseRing::Index>(R.index_of(x.ck))};
}

Quaternion Carrier::to_quat(const Quad& x) const {
  const Ring& R = D_.ring();
  return {R.element_at(x[0]), R.element_at(x[1]), R.element_at(x[2]), R.element_at(x[3])};
}

}  // namespace idemquat

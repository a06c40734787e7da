#pragma once

// Table-driven arithmetic on element indices, plus packed 2x2 / quaternion
// carriers for exhaustive sweeps.

#include <array>
#include <cstdint>
#include <vector>

#include "idemquat/chainring.hpp"
#include "idemquat/mat2.hpp"
#include "idemquat/quaternion.hpp"

namespace idemquat {

class DenseRing {
 public:
  using Index = std::uint16_t;
  static constexpr std::uint64_t kMaxSize = 1024;

  /// Throws Errc::CapExceeded when the ring has more than kMaxSize elements.
  explicit DenseRing(const Ring& R);

  const Ring& ring() const { return ring_; }
  std::uint32_t size() const { return size_; }
  Index zero() const { return 0; }
  Index one() const { return one_; }

  Index add(Index a, Index b) const { return add_[a * size_ + b]; }
  Index mul(Index a, Index b) const { return mul_[a * size_ + b]; }
  Index neg(Index a) const { return neg_[a]; }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  bool is_unit(Index a) const { return unit_[a] != 0; }
  Index inv(Index a) const { return inv_[a]; }

 private:
  Ring ring_;
  std::uint32_t size_;
  Index one_;
  std::vector<Index> add_, mul_, neg_, inv_;
  std::vector<std::uint8_t> unit_;
};

/// Four ring indices: (e11, e12, e21, e22) or (c1, ci, cj, ck).
using Quad = std::array<DenseRing::Index, 4>;

/// Packs a quad as ((x0 * s + x1) * s + x2) * s + x3.
class Carrier {
 public:
  explicit Carrier(const DenseRing& D) : D_(D), s_(D.size()) {}

  std::uint64_t count() const { return std::uint64_t{s_} * s_ * s_ * s_; }
  std::uint64_t pack(const Quad& x) const { return ((std::uint64_t{x[0]} * s_ + x[1]) * s_ + x[2]) * s_ + x[3]; }
  Quad unpack(std::uint64_t idx) const {
    Quad x;
    for (int i = 3; i >= 0; --i) {
      x[i] = static_cast<DenseRing::Index>(idx % s_);
      idx /= s_;
    }
    return x;
  }

  Quad mat_mul(const Quad& A, const Quad& B) const {
    return {D_.add(D_.mul(A[0], B[0]), D_.mul(A[1], B[2])), D_.add(D_.mul(A[0], B[1]), D_.mul(A[1], B[3])),
            D_.add(D_.mul(A[2], B[0]), D_.mul(A[3], B[2])), D_.add(D_.mul(A[2], B[1]), D_.mul(A[3], B[3]))};
  }
  DenseRing::Index mat_det(const Quad& A) const { return D_.sub(D_.mul(A[0], A[3]), D_.mul(A[1], A[2])); }

  Quad quat_mul(const Quad& x, const Quad& y) const {
    auto m = [&](int i, int j) { return D_.mul(x[i], y[j]); };
    return {D_.sub(D_.sub(D_.sub(m(0, 0), m(1, 1)), m(2, 2)), m(3, 3)),
            D_.sub(D_.add(D_.add(m(0, 1), m(1, 0)), m(2, 3)), m(3, 2)),
            D_.add(D_.add(D_.sub(m(0, 2), m(1, 3)), m(2, 0)), m(3, 1)),
            D_.add(D_.sub(D_.add(m(0, 3), m(1, 2)), m(2, 1)), m(3, 0))};
  }
  DenseRing::Index quat_norm(const Quad& x) const {
    DenseRing::Index s = D_.mul(x[0], x[0]);
    for (int i = 1; i < 4; ++i) s = D_.add(s, D_.mul(x[i], x[i]));
    return s;
  }

  Quad from_mat(const Mat2& A) const;
  Mat2 to_mat(const Quad& x) const;
  Quad from_quat(const Quaternion& x) const;
  Quaternion to_quat(const Quad& x) const;

 private:
  const DenseRing& D_;
  std::uint32_t s_;
};

}  // namespace idemquat

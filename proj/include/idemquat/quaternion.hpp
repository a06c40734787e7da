#pragma once

// The quaternion ring H(R) = R + Ri + Rj + Rk with i^2 = j^2 = k^2 = ijk = -1,
// and an explicit isomorphism H(R) -> M_2(R) when 2 is a unit in R.

#include <array>
#include <string>
#include <string_view>

#include "idemquat/chainring.hpp"
#include "idemquat/mat2.hpp"

namespace idemquat {

struct Quaternion {
  Element c1, ci, cj, ck;

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
  friend auto operator<=>(const Quaternion&, const Quaternion&) = default;
};

namespace quat {

Quaternion zero(const Ring& R);
Quaternion one(const Ring& R);
Quaternion scalar(const Ring& R, const Element& c);
Quaternion basis_i(const Ring& R);
Quaternion basis_j(const Ring& R);
Quaternion basis_k(const Ring& R);

Quaternion add(const Ring& R, const Quaternion& x, const Quaternion& y);
Quaternion neg(const Ring& R, const Quaternion& x);
Quaternion sub(const Ring& R, const Quaternion& x, const Quaternion& y);
Quaternion mul(const Ring& R, const Quaternion& x, const Quaternion& y);
/// r1 - r2 i - r3 j - r4 k
Quaternion conj(const Ring& R, const Quaternion& x);
/// r1^2 + r2^2 + r3^2 + r4^2, the scalar part of x * conj(x).
Element norm(const Ring& R, const Quaternion& x);
bool is_unit(const Ring& R, const Quaternion& x);
bool is_idempotent(const Ring& R, const Quaternion& x);

/// `<e>+<e>i+<e>j+<e>k`; whitespace-insensitive, missing terms are zero and a
/// bare `i` means `1i`.
Quaternion parse(const Ring& R, std::string_view text);
std::string format(const Ring& R, const Quaternion& x);

/// Index of x among the q^(4n) quaternions, c1 most significant.
std::uint64_t index_of(const Ring& R, const Quaternion& x);
Quaternion at(const Ring& R, std::uint64_t index);

}  // namespace quat

/// H(R) -> M_2(R) sending i to [[a, b], [b, -a]] and j to [[0, 1], [-1, 0]]
/// for the first (a, b) in enumeration order with a^2 + b^2 + 1 = 0.
class QuatMatIso {
 public:
  /// Throws Errc::TwoNotInvertible when p = 2.
  explicit QuatMatIso(const Ring& R);

  const Ring& ring() const { return ring_; }
  const Element& a() const { return a_; }
  const Element& b() const { return b_; }
  /// Images of 1, i, j, k.
  const std::array<Mat2, 4>& images() const { return images_; }
  /// Determinant of the 4x4 change of basis (always a unit).
  const Element& basis_det() const { return basis_det_; }

  Mat2 to_matrix(const Quaternion& x) const;
  Quaternion from_matrix(const Mat2& A) const;

 private:
  Ring ring_;
  Element a_, b_;
  std::array<Mat2, 4> images_;
  Element basis_det_;
  // Row-major inverse of the matrix whose columns are the images in the
  // (E11, E12, E21, E22) coordinates.
  std::array<Element, 16> inverse_;
};

/// Deterministic 4x4 determinant over a commutative ring (Laplace expansion).
Element det4(const Ring& R, const std::array<Element, 16>& m);

}  // namespace idemquat

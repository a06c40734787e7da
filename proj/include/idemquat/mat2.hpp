#pragma once

// 2x2 matrices over a chain ring, the conjugation action of GL_2(R), and the
// orbit classification of the matrices M(a, b) = [[a, b], [0, 0]].

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "idemquat/bigint.hpp"
#include "idemquat/chainring.hpp"

namespace idemquat {

struct Mat2 {
  Element e11, e12, e21, e22;

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

/// A unimodular row (w1, w2): at least one coordinate is a unit.
struct Row2 {
  Element w1, w2;

  friend bool operator==(const Row2&, const Row2&) = default;
};

/// Which of the two orbit-size formulas to use for M(a, x^k) with k < l < n.
/// They differ only in that case and agree when l = k + 1.
enum class OrbitVariant { Statement, Proof };

std::string_view variant_name(OrbitVariant v);

/// Canonical orbit identifier: (a, ZERO) stands for O_{M(a,0)}, (a, POWER(k))
/// for O_{M(a,x^k)} with k < valuation(a).
struct OrbitLabel {
  enum class BClass { Zero, Power };

  Element a;
  BClass bclass = BClass::Zero;
  std::uint32_t k = 0;  // meaningful for Power only

  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
};

namespace mat {

Mat2 identity(const Ring& R);
Mat2 zero(const Ring& R);
Mat2 m_of(const Ring& R, const Element& a, const Element& b);
Mat2 diag(const Ring& R, const Element& d1, const Element& d2);
/// E12(t) = [[1, t], [0, 1]].
Mat2 e12(const Ring& R, const Element& t);
/// E21(t) = [[1, 0], [t, 1]].
Mat2 e21(const Ring& R, const Element& t);

Mat2 add(const Ring& R, const Mat2& A, const Mat2& B);
Mat2 sub(const Ring& R, const Mat2& A, const Mat2& B);
Mat2 mul(const Ring& R, const Mat2& A, const Mat2& B);
Mat2 scale(const Ring& R, const Element& c, const Mat2& A);
Element det(const Ring& R, const Mat2& A);
Element trace(const Ring& R, const Mat2& A);
bool is_idempotent(const Ring& R, const Mat2& A);
bool is_invertible(const Ring& R, const Mat2& A);
/// Throws Errc::NotInvertible.
Mat2 inverse(const Ring& R, const Mat2& A);
/// P A P^-1. Throws Errc::NotInvertible.
Mat2 conjugate(const Ring& R, const Mat2& P, const Mat2& A);

/// |GL_2(R)| = q^(4n-3) (q-1) (q^2-1).
BigInt gl2_size(std::uint64_t q, std::uint32_t n);
inline BigInt gl2_size(const Ring& R) { return gl2_size(R.q(), R.n()); }

/// P with conjugate(P, A) = M(1, 0) for a nontrivial idempotent A.
/// Throws Errc::NotIdempotent or Errc::TrivialIdempotent.
Mat2 diagonalize_idempotent(const Ring& R, const Mat2& A);

/// Whether M(a, b) and M(a2, b2) are conjugate.
bool same_orbit_m(const Ring& R, const Element& a, const Element& b, const Element& a2,
                  const Element& b2);

OrbitLabel canonical_rep(const Ring& R, const Element& a, const Element& b);
/// Matrix M(a, 0) or M(a, x^k) named by the label.
Mat2 label_matrix(const Ring& R, const OrbitLabel& label);
std::string label_bclass(const OrbitLabel& label);

/// Orbit size from q, n, l = valuation(a) and the b-class alone.
BigInt orbit_size_formula(std::uint64_t q, std::uint32_t n, std::uint32_t l,
                          OrbitLabel::BClass bclass, std::uint32_t k, OrbitVariant variant);
BigInt orbit_size(const Ring& R, const OrbitLabel& label, OrbitVariant variant);
/// gl2_size / orbit_size; throws Errc::NonIntegralStabilizer if the division
/// is not exact.
BigInt stabilizer_size(const Ring& R, const OrbitLabel& label, OrbitVariant variant);

/// Invertible P whose second row is w. Throws Errc::NotUnimodular.
Mat2 complete_unimodular(const Ring& R, const Row2& w);

/// Every orbit label of M_2(R): for each a, (a, ZERO) then (a, POWER(k)) for
/// k < valuation(a). Enumeration order of a.
std::vector<OrbitLabel> all_labels(const Ring& R);

std::string format(const Ring& R, const Mat2& A);
/// `[[e,e],[e,e]]`, whitespace-insensitive.
Mat2 parse(const Ring& R, std::string_view text);

}  // namespace mat
}  // namespace idemquat

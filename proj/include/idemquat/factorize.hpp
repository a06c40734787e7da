#pragma once

// Deciding whether an element of M_2(R) or H(R) is a product of idempotents,
// with an explicit verified factorization into two idempotents.

#include <cstdint>
#include <optional>
#include <vector>

#include "idemquat/mat2.hpp"
#include "idemquat/quaternion.hpp"

namespace idemquat {

/// e1 * e2 == target with both factors idempotent. Conjugators are the
/// matrices P used as P X P^-1 while building the pair, outermost last.
struct Witness {
  Mat2 e1, e2;
  std::vector<Mat2> conjugators;
};

struct QuaternionWitness {
  Quaternion e1, e2;
  std::vector<Mat2> conjugators;
  std::optional<std::uint32_t> r_bound;
};

namespace factor {

/// Unimodular w with w A = 0, searched over (1, s) for s in R then (s, 1) for
/// s in J(R); every unimodular row is a unit multiple of exactly one of these.
std::optional<Row2> find_left_kernel_unimodular(const Ring& R, const Mat2& A);

/// Two idempotents with e1 e2 = M(a, b). Always succeeds.
Witness factor_m(const Ring& R, const Element& a, const Element& b);

std::optional<Witness> is_product_of_two_idempotents_mat(const Ring& R, const Mat2& A);

/// Any r >= 1 gives the same answer, so `r_bound` is only carried into the
/// result. Routes through `iso` when 2 is a unit; pass nullptr otherwise.
std::optional<QuaternionWitness> is_product_of_idempotents(const Ring& R, const QuatMatIso* iso,
                                                           const Quaternion& x,
                                                           std::optional<std::uint32_t> r_bound = {});

/// Throws Errc::VerificationFailed unless both factors are idempotent and
/// multiply to `target`.
void verify(const Ring& R, const Witness& w, const Mat2& target);
void verify(const Ring& R, const QuaternionWitness& w, const Quaternion& target);

}  // namespace factor
}  // namespace idemquat

#include "idemquat/factorize.hpp"

namespace idemquat::factor {

std::optional<Row2> find_left_kernel_unimodular(const Ring& R, const Mat2& A) {
  auto kills = [&](const Element& w1, const Element& w2) {
    return R.is_zero(R.add(R.mul(w1, A.e11), R.mul(w2, A.e21))) &&
           R.is_zero(R.add(R.mul(w1, A.e12), R.mul(w2, A.e22)));
  };
  // w A = 0 is R-linear in w, so testing one representative per unit class
  // is enough.
  for (const Element& s : R.elements())
    if (kills(R.one(), s)) return Row2{R.one(), s};
  for (const Element& s : R.ideal(1))
    if (kills(s, R.one())) return Row2{s, R.one()};
  return std::nullopt;
}

Witness factor_m(const Ring& R, const Element& a, const Element& b) {
  const Mat2 target = mat::m_of(R, a, b);
  if (R.is_zero(a) && R.is_zero(b)) {
    Witness w{mat::zero(R), mat::zero(R), {}};
    verify(R, w, target);
    return w;
  }
  // a = v x^l, b = u x^k; b = 0 reads as u = 1, k = n.
  const auto [v, l] = R.unit_part(a);
  const auto [u, k] = R.unit_part(b);
  if (l >= k) {
    const Element one_minus_a = R.sub(R.one(), a);
    const Element lower =
        R.mul(R.mul(R.mul(R.inv(u), v), one_minus_a), R.pow(R.uniformizer(), l - k));
    Witness w{mat::m_of(R, R.one(), R.zero()), Mat2{a, b, lower, one_minus_a}, {}};
    verify(R, w, target);
    return w;
  }
  // Conjugating by E12(t) with t = 1 - u v^-1 x^(k-l) turns M(a, b) into
  // M(a, a), which falls in the first case.
  const Element t = R.sub(R.one(), R.mul(R.mul(u, R.inv(v)), R.pow(R.uniformizer(), k - l)));
  const Mat2 Q = mat::e12(R, t);
  Witness base = factor_m(R, a, a);
  Witness w{mat::conjugate(R, Q, base.e1), mat::conjugate(R, Q, base.e2), std::move(base.conjugators)};
  w.conjugators.push_back(Q);
  verify(R, w, target);
  return w;
}

std::optional<Witness> is_product_of_two_idempotents_mat(const Ring& R, const Mat2& A) {
  const Mat2 I = mat::identity(R);
  if (A == I) {
    Witness w{I, I, {}};
    verify(R, w, A);
    return w;
  }
  const auto row = find_left_kernel_unimodular(R, A);
  if (!row) return std::nullopt;
  const Mat2 P = mat::complete_unimodular(R, *row);
  // The second row of P A is w A = 0, so P A P^-1 = M(a, b).
  const Mat2 B = mat::conjugate(R, P, A);
  if (!R.is_zero(B.e21) || !R.is_zero(B.e22))
    throw Error(Errc::VerificationFailed, "conjugated matrix is not of the form M(a, b)");
  Witness base = factor_m(R, B.e11, B.e12);
  const Mat2 Pinv = mat::inverse(R, P);
  Witness w{mat::conjugate(R, Pinv, base.e1), mat::conjugate(R, Pinv, base.e2),
            std::move(base.conjugators)};
  w.conjugators.push_back(Pinv);
  verify(R, w, A);
  return w;
}

std::optional<QuaternionWitness> is_product_of_idempotents(const Ring& R, const QuatMatIso* iso,
                                                           const Quaternion& x,
                                                           std::optional<std::uint32_t> r_bound) {
  if (!R.is_unit(R.from_int(2))) {
    // H(R) is local, so its only idempotents are 0 and 1.
    if (x == quat::zero(R)) return QuaternionWitness{x, x, {}, r_bound};
    if (x == quat::one(R)) return QuaternionWitness{x, x, {}, r_bound};
    return std::nullopt;
  }
  if (iso == nullptr) throw Error(Errc::TwoNotInvertible, "an isomorphism to M_2(R) is required");
  auto w = is_product_of_two_idempotents_mat(R, iso->to_matrix(x));
  if (!w) return std::nullopt;
  QuaternionWitness qw{iso->from_matrix(w->e1), iso->from_matrix(w->e2), std::move(w->conjugators),
                       r_bound};
  verify(R, qw, x);
  return qw;
}

void verify(const Ring& R, const Witness& w, const Mat2& target) {
  if (!mat::is_idempotent(R, w.e1) || !mat::is_idempotent(R, w.e2) ||
      mat::mul(R, w.e1, w.e2) != target)
    throw Error(Errc::VerificationFailed, "witness for " + mat::format(R, target) + " does not check");
}

void verify(const Ring& R, const QuaternionWitness& w, const Quaternion& target) {
  if (!quat::is_idempotent(R, w.e1) || !quat::is_idempotent(R, w.e2) ||
      quat::mul(R, w.e1, w.e2) != target)
    throw Error(Errc::VerificationFailed, "witness for " + quat::format(R, target) + " does not check");
}

}  // namespace idemquat::factor

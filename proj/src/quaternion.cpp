#include "idemquat/quaternion.hpp"

#include <cctype>

namespace idemquat {
namespace quat {

Quaternion zero(const Ring& R) { return {R.zero(), R.zero(), R.zero(), R.zero()}; }
Quaternion one(const Ring& R) { return {R.one(), R.zero(), R.zero(), R.zero()}; }
Quaternion scalar(const Ring& R, const Element& c) { return {c, R.zero(), R.zero(), R.zero()}; }
Quaternion basis_i(const Ring& R) { return {R.zero(), R.one(), R.zero(), R.zero()}; }
Quaternion basis_j(const Ring& R) { return {R.zero(), R.zero(), R.one(), R.zero()}; }
Quaternion basis_k(const Ring& R) { return {R.zero(), R.zero(), R.zero(), R.one()}; }

Quaternion add(const Ring& R, const Quaternion& x, const Quaternion& y) {
  return {R.add(x.c1, y.c1), R.add(x.ci, y.ci), R.add(x.cj, y.cj), R.add(x.ck, y.ck)};
}

Quaternion neg(const Ring& R, const Quaternion& x) {
  return {R.neg(x.c1), R.neg(x.ci), R.neg(x.cj), R.neg(x.ck)};
}

Quaternion sub(const Ring& R, const Quaternion& x, const Quaternion& y) { return add(R, x, neg(R, y)); }

Quaternion mul(const Ring& R, const Quaternion& x, const Quaternion& y) {
  auto m = [&](const Element& u, const Element& v) { return R.mul(u, v); };
  // ij = k, jk = i, ki = j and the reversed products negate.
  Element re = R.sub(R.sub(R.sub(m(x.c1, y.c1), m(x.ci, y.ci)), m(x.cj, y.cj)), m(x.ck, y.ck));
  Element ii = R.sub(R.add(R.add(m(x.c1, y.ci), m(x.ci, y.c1)), m(x.cj, y.ck)), m(x.ck, y.cj));
  Element jj = R.add(R.add(R.sub(m(x.c1, y.cj), m(x.ci, y.ck)), m(x.cj, y.c1)), m(x.ck, y.ci));
  Element kk = R.add(R.sub(R.add(m(x.c1, y.ck), m(x.ci, y.cj)), m(x.cj, y.ci)), m(x.ck, y.c1));
  return {re, ii, jj, kk};
}

Quaternion conj(const Ring& R, const Quaternion& x) { return {x.c1, R.neg(x.ci), R.neg(x.cj), R.neg(x.ck)}; }

Element norm(const Ring& R, const Quaternion& x) {
  Element s = R.mul(x.c1, x.c1);
  s = R.add(s, R.mul(x.ci, x.ci));
  s = R.add(s, R.mul(x.cj, x.cj));
  return R.add(s, R.mul(x.ck, x.ck));
}

bool is_unit(const Ring& R, const Quaternion& x) { return R.is_unit(norm(R, x)); }

bool is_idempotent(const Ring& R, const Quaternion& x) { return mul(R, x, x) == x; }

Quaternion parse(const Ring& R, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(Errc::ParseError, "empty quaternion literal");

  Quaternion x = zero(R);
  bool seen[4] = {false, false, false, false};
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find('+', pos);
    if (end == std::string::npos) end = s.size();
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw Error(Errc::ParseError, "empty term in '" + s + "'");
    int slot = 0;
    if (term.back() == 'i' || term.back() == 'j' || term.back() == 'k') {
      slot = term.back() == 'i' ? 1 : term.back() == 'j' ? 2 : 3;
      term.pop_back();
    }
    if (seen[slot]) throw Error(Errc::ParseError, "repeated component in '" + s + "'");
    seen[slot] = true;
    const Element e = term.empty() ? R.one() : R.parse_element(term);
    (slot == 0 ? x.c1 : slot == 1 ? x.ci : slot == 2 ? x.cj : x.ck) = e;
    pos = end + 1;
  }
  return x;
}

std::string format(const Ring& R, const Quaternion& x) {
  return R.format(x.c1) + "+" + R.format(x.ci) + "i+" + R.format(x.cj) + "j+" + R.format(x.ck) + "k";
}

std::uint64_t index_of(const Ring& R, const Quaternion& x) {
  const std::uint64_t s = R.size();
  return ((R.index_of(x.c1) * s + R.index_of(x.ci)) * s + R.index_of(x.cj)) * s + R.index_of(x.ck);
}

Quaternion at(const Ring& R, std::uint64_t index) {
  const std::uint64_t s = R.size();
  Quaternion x;
  x.ck = R.element_at(index % s);
  index /= s;
  x.cj = R.element_at(index % s);
  index /= s;
  x.ci = R.element_at(index % s);
  index /= s;
  x.c1 = R.element_at(index);
  return x;
}

}  // namespace quat

namespace {

Element det3(const Ring& R, const Element m[3][3]) {
  auto minor = [&](int r1, int c1, int r2, int c2) {
    return R.sub(R.mul(m[r1][c1], m[r2][c2]), R.mul(m[r1][c2], m[r2][c1]));
  };
  Element d = R.mul(m[0][0], minor(1, 1, 2, 2));
  d = R.sub(d, R.mul(m[0][1], minor(1, 0, 2, 2)));
  return R.add(d, R.mul(m[0][2], minor(1, 0, 2, 1)));
}

Element cofactor(const Ring& R, const std::array<Element, 16>& m, int row, int col) {
  Element sub[3][3];
  for (int i = 0, si = 0; i < 4; ++i) {
    if (i == row) continue;
    for (int j = 0, sj = 0; j < 4; ++j) {
      if (j == col) continue;
      sub[si][sj++] = m[i * 4 + j];
    }
    ++si;
  }
  const Element d = det3(R, sub);
  return (row + col) % 2 == 0 ? d : R.neg(d);
}

std::array<Element, 4> coords(const Mat2& A) { return {A.e11, A.e12, A.e21, A.e22}; }

}  // namespace

Element det4(const Ring& R, const std::array<Element, 16>& m) {
  Element d = R.zero();
  for (int j = 0; j < 4; ++j) d = R.add(d, R.mul(m[j], cofactor(R, m, 0, j)));
  return d;
}

QuatMatIso::QuatMatIso(const Ring& R) : ring_(R) {
  if (R.p() == 2) throw Error(Errc::TwoNotInvertible, "2 lies in J(R) for " + R.describe());

  const Element minus_one = R.neg(R.one());
  bool found = false;
  const auto elems = R.elements();
  for (const Element& a : elems) {
    const Element rest = R.sub(minus_one, R.mul(a, a));
    for (const Element& b : elems) {
      if (R.mul(b, b) == rest) {
        a_ = a;
        b_ = b;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  if (!found) throw Error(Errc::VerificationFailed, "no a, b with a^2 + b^2 = -1 in " + R.describe());

  const Mat2 img_i{a_, b_, b_, R.neg(a_)};
  const Mat2 img_j{R.zero(), R.one(), minus_one, R.zero()};
  images_ = {mat::identity(R), img_i, img_j, mat::mul(R, img_i, img_j)};

  std::array<Element, 16> basis;
  for (int col = 0; col < 4; ++col) {
    const auto c = coords(images_[col]);
    for (int row = 0; row < 4; ++row) basis[row * 4 + col] = c[row];
  }
  basis_det_ = det4(R, basis);
  if (!R.is_unit(basis_det_))
    throw Error(Errc::VerificationFailed, "images of 1, i, j, k are not an R-basis of M_2(R)");
  const Element dinv = R.inv(basis_det_);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) inverse_[i * 4 + j] = R.mul(dinv, cofactor(R, basis, j, i));

  // Hamilton relations on the images.
  const Mat2 minus_id = mat::scale(R, minus_one, mat::identity(R));
  const Mat2& mi = images_[1];
  const Mat2& mj = images_[2];
  const Mat2& mk = images_[3];
  const bool ok = mat::mul(R, mi, mi) == minus_id && mat::mul(R, mj, mj) == minus_id &&
                  mat::mul(R, mk, mk) == minus_id && mat::mul(R, mat::mul(R, mi, mj), mk) == minus_id &&
                  mat::mul(R, mi, mj) == mat::scale(R, minus_one, mat::mul(R, mj, mi));
  if (!ok) throw Error(Errc::VerificationFailed, "matrix images violate the quaternion relations");
}

Mat2 QuatMatIso::to_matrix(const Quaternion& x) const {
  const Ring& R = ring_;
  Mat2 A = mat::scale(R, x.c1, images_[0]);
  A = mat::add(R, A, mat::scale(R, x.ci, images_[1]));
  A = mat::add(R, A, mat::scale(R, x.cj, images_[2]));
  return mat::add(R, A, mat::scale(R, x.ck, images_[3]));
}

Quaternion QuatMatIso::from_matrix(const Mat2& A) const {
  const Ring& R = ring_;
  const auto v = coords(A);
  std::array<Element, 4> c;
  for (int i = 0; i < 4; ++i) {
    Element s = R.zero();
    for (int j = 0; j < 4; ++j) s = R.add(s, R.mul(inverse_[i * 4 + j], v[j]));
    c[i] = s;
  }
  return {c[0], c[1], c[2], c[3]};
}

}  // namespace idemquat

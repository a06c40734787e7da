#include "idemquat/mat2.hpp"

#include <cctype>
#include <vector>

namespace idemquat {

std::string_view variant_name(OrbitVariant v) {
  return v == OrbitVariant::Statement ? "STATEMENT" : "PROOF";
}

namespace mat {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Contents of one outer bracket pair, split at depth-zero commas.
std::vector<std::string> split_bracketed(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error(Errc::ParseError, "expected a bracketed list, got '" + s + "'");
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const char c = s[i];
    if (c == '[') ++depth;
    if (c == ']' && --depth < 0) throw Error(Errc::ParseError, "unbalanced brackets in '" + s + "'");
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (depth != 0) throw Error(Errc::ParseError, "unbalanced brackets in '" + s + "'");
  parts.push_back(cur);
  return parts;
}

}  // namespace

Mat2 identity(const Ring& R) { return {R.one(), R.zero(), R.zero(), R.one()}; }
Mat2 zero(const Ring& R) { return {R.zero(), R.zero(), R.zero(), R.zero()}; }
Mat2 m_of(const Ring& R, const Element& a, const Element& b) { return {a, b, R.zero(), R.zero()}; }
Mat2 diag(const Ring& R, const Element& d1, const Element& d2) { return {d1, R.zero(), R.zero(), d2}; }
Mat2 e12(const Ring& R, const Element& t) { return {R.one(), t, R.zero(), R.one()}; }
Mat2 e21(const Ring& R, const Element& t) { return {R.one(), R.zero(), t, R.one()}; }

Mat2 add(const Ring& R, const Mat2& A, const Mat2& B) {
  return {R.add(A.e11, B.e11), R.add(A.e12, B.e12), R.add(A.e21, B.e21), R.add(A.e22, B.e22)};
}

Mat2 sub(const Ring& R, const Mat2& A, const Mat2& B) {
  return {R.sub(A.e11, B.e11), R.sub(A.e12, B.e12), R.sub(A.e21, B.e21), R.sub(A.e22, B.e22)};
}

Mat2 mul(const Ring& R, const Mat2& A, const Mat2& B) {
  return {R.add(R.mul(A.e11, B.e11), R.mul(A.e12, B.e21)),
          R.add(R.mul(A.e11, B.e12), R.mul(A.e12, B.e22)),
          R.add(R.mul(A.e21, B.e11), R.mul(A.e22, B.e21)),
          R.add(R.mul(A.e21, B.e12), R.mul(A.e22, B.e22))};
}

Mat2 scale(const Ring& R, const Element& c, const Mat2& A) {
  return {R.mul(c, A.e11), R.mul(c, A.e12), R.mul(c, A.e21), R.mul(c, A.e22)};
}

Element det(const Ring& R, const Mat2& A) { return R.sub(R.mul(A.e11, A.e22), R.mul(A.e12, A.e21)); }

Element trace(const Ring& R, const Mat2& A) { return R.add(A.e11, A.e22); }

bool is_idempotent(const Ring& R, const Mat2& A) { return mul(R, A, A) == A; }

bool is_invertible(const Ring& R, const Mat2& A) { return R.is_unit(det(R, A)); }

Mat2 inverse(const Ring& R, const Mat2& A) {
  const Element d = det(R, A);
  if (!R.is_unit(d)) throw Error(Errc::NotInvertible, "det = " + R.format(d) + " is not a unit");
  const Element di = R.inv(d);
  return {R.mul(di, A.e22), R.mul(di, R.neg(A.e12)), R.mul(di, R.neg(A.e21)), R.mul(di, A.e11)};
}

Mat2 conjugate(const Ring& R, const Mat2& P, const Mat2& A) {
  return mul(R, mul(R, P, A), inverse(R, P));
}

BigInt gl2_size(std::uint64_t q, std::uint32_t n) {
  const BigInt Q = q;
  return ipow(Q, 4 * std::uint64_t{n} - 3) * (Q - 1) * (Q * Q - 1);
}

Mat2 diagonalize_idempotent(const Ring& R, const Mat2& A) {
  if (!is_idempotent(R, A)) throw Error(Errc::NotIdempotent, format(R, A));
  if (A == zero(R) || A == identity(R)) throw Error(Errc::TrivialIdempotent, format(R, A));

  // Unimodular column representatives: (1, s) for s in R, then (s, 1) for s in J.
  std::vector<Row2> reps;
  for (const Element& s : R.elements()) reps.push_back({R.one(), s});
  for (const Element& s : R.ideal(1)) reps.push_back({s, R.one()});

  auto apply = [&](const Row2& v) {
    return Row2{R.add(R.mul(A.e11, v.w1), R.mul(A.e12, v.w2)),
                R.add(R.mul(A.e21, v.w1), R.mul(A.e22, v.w2))};
  };
  const Row2 null{R.zero(), R.zero()};
  std::vector<Row2> fixed, kernel;
  for (const Row2& v : reps) {
    const Row2 image = apply(v);
    if (image == v) fixed.push_back(v);
    if (image == null) kernel.push_back(v);
  }
  for (const Row2& v : fixed) {
    for (const Row2& w : kernel) {
      const Mat2 S{v.w1, w.w1, v.w2, w.w2};
      if (!is_invertible(R, S)) continue;
      // A S = S M(1,0), so S^-1 A S = M(1,0).
      const Mat2 P = inverse(R, S);
      if (conjugate(R, P, A) == m_of(R, R.one(), R.zero())) return P;
    }
  }
  throw Error(Errc::VerificationFailed, "no diagonalizing basis found for " + format(R, A));
}

bool same_orbit_m(const Ring& R, const Element& a, const Element& b, const Element& a2,
                  const Element& b2) {
  if (a != a2) return false;
  const std::uint32_t l = R.valuation(a);
  const std::uint32_t k = R.valuation(b);
  const std::uint32_t k2 = R.valuation(b2);
  return (k >= l && k2 >= l) || (k == k2 && k < l);
}

OrbitLabel canonical_rep(const Ring& R, const Element& a, const Element& b) {
  const std::uint32_t l = R.valuation(a);
  const std::uint32_t k = R.valuation(b);
  if (k >= l) return {a, OrbitLabel::BClass::Zero, 0};
  return {a, OrbitLabel::BClass::Power, k};
}

Mat2 label_matrix(const Ring& R, const OrbitLabel& label) {
  if (label.bclass == OrbitLabel::BClass::Zero) return m_of(R, label.a, R.zero());
  return m_of(R, label.a, R.pow(R.uniformizer(), label.k));
}

std::string label_bclass(const OrbitLabel& label) {
  if (label.bclass == OrbitLabel::BClass::Zero) return "ZERO";
  return "POWER(" + std::to_string(label.k) + ")";
}

BigInt orbit_size_formula(std::uint64_t q, std::uint32_t n, std::uint32_t l,
                          OrbitLabel::BClass bclass, std::uint32_t k, OrbitVariant variant) {
  const BigInt Q = q;
  if (l >= n) {
    if (bclass == OrbitLabel::BClass::Zero) return 1;
    // a = 0, b = unit * x^k
    return ipow(Q, 2 * (std::uint64_t{n} - k - 1)) * (Q * Q - 1);
  }
  if (bclass == OrbitLabel::BClass::Zero) return ipow(Q, 2 * std::uint64_t{n} - 2 * l - 1) * (Q + 1);
  // k < l < n
  if (variant == OrbitVariant::Statement)
    return ipow(Q, 2 * std::uint64_t{n} - k - l - 1) * (Q * Q - 1);
  return ipow(Q, 2 * (std::uint64_t{n} - k - 1)) * (Q * Q - 1);
}

BigInt orbit_size(const Ring& R, const OrbitLabel& label, OrbitVariant variant) {
  return orbit_size_formula(R.q(), R.n(), R.valuation(label.a), label.bclass, label.k, variant);
}

BigInt stabilizer_size(const Ring& R, const OrbitLabel& label, OrbitVariant variant) {
  const BigInt group = gl2_size(R);
  const BigInt orbit = orbit_size(R, label, variant);
  if (group % orbit != 0)
    throw Error(Errc::NonIntegralStabilizer, "orbit size " + orbit.str() + " does not divide |GL_2| = " +
                                                 group.str());
  return group / orbit;
}

Mat2 complete_unimodular(const Ring& R, const Row2& w) {
  if (R.is_unit(w.w2)) return {R.one(), R.zero(), w.w1, w.w2};
  if (R.is_unit(w.w1)) return {R.zero(), R.one(), w.w1, w.w2};
  throw Error(Errc::NotUnimodular, "(" + R.format(w.w1) + ", " + R.format(w.w2) + ")");
}

std::vector<OrbitLabel> all_labels(const Ring& R) {
  std::vector<OrbitLabel> labels;
  for (const Element& a : R.elements()) {
    labels.push_back({a, OrbitLabel::BClass::Zero, 0});
    const std::uint32_t l = R.valuation(a);
    for (std::uint32_t k = 0; k < l; ++k) labels.push_back({a, OrbitLabel::BClass::Power, k});
  }
  return labels;
}

std::string format(const Ring& R, const Mat2& A) {
  return "[[" + R.format(A.e11) + "," + R.format(A.e12) + "],[" + R.format(A.e21) + "," +
         R.format(A.e22) + "]]";
}

Mat2 parse(const Ring& R, std::string_view text) {
  const auto rows = split_bracketed(strip_spaces(text));
  if (rows.size() != 2) throw Error(Errc::ParseError, "matrix literal needs two rows");
  const auto top = split_bracketed(rows[0]);
  const auto bottom = split_bracketed(rows[1]);
  if (top.size() != 2 || bottom.size() != 2)
    throw Error(Errc::ParseError, "matrix rows need two entries");
  return {R.parse_element(top[0]), R.parse_element(top[1]), R.parse_element(bottom[0]),
          R.parse_element(bottom[1])};
}

}  // namespace mat
}  // namespace idemquat

#pragma once

// Finite commutative chain rings: Z/p^n, GF(q)[y]/(y^n) and Galois rings
// GR(p^l, r). Every ring here is local and principal with J(R) = (x) for a
// fixed uniformizer x, |R| = q^n and R/J(R) = GF(q).

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idemquat/error.hpp"

namespace idemquat {

inline constexpr std::size_t kMaxCoeffs = 16;

enum class RingKind { Zpn, TruncPoly, Galois };

/// Parameters of a chain ring before materialization.
///
/// `modulus` holds the coefficients of f over F_p, lowest degree first, and is
/// empty for Zpn. For TruncPoly `n` is the nilpotency degree of y; for Galois
/// `l` is the characteristic exponent and becomes the chain length.
struct RingSpec {
  RingKind kind = RingKind::Zpn;
  std::uint32_t p = 2;
  std::uint32_t n = 1;
  std::uint32_t r = 1;
  std::uint32_t l = 1;
  std::vector<std::uint32_t> modulus;

  /// Grammar: `zpn:p=<prime>,n=<int>` | `tp:p=<prime>,r=<int>,n=<int>,f=<poly>`
  /// | `gr:p=<prime>,l=<int>,r=<int>,f=<poly>`.
  static RingSpec parse(std::string_view text);
  std::string to_string() const;
};

/// A ring element in canonical coefficient form.
///
/// Zpn stores one residue mod p^n. TruncPoly stores n*r residues mod p, slot
/// i*r + j holding the coefficient of y^i t^j. Galois stores r residues mod
/// p^l. Unused slots are always zero, so equality is plain array equality.
struct Element {
  std::array<std::uint32_t, kMaxCoeffs> coeffs{};
  std::uint8_t length = 0;

  std::span<const std::uint32_t> view() const { return {coeffs.data(), length}; }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

struct UnitPart {
  Element unit;
  std::uint32_t valuation = 0;
};

bool is_prime(std::uint64_t v);

/// Polynomial text such as `t^2+2t+1`, reduced mod p, lowest degree first.
std::vector<std::uint32_t> parse_poly(std::string_view text, std::uint32_t p);
std::string format_poly(std::span<const std::uint32_t> coeffs);

/// True when the monic polynomial `f` has no monic factor of degree
/// 1..deg(f)/2 over F_p.
bool is_irreducible_mod_p(std::span<const std::uint32_t> f, std::uint32_t p);

/// A materialized chain ring. Immutable after construction; all arithmetic is
/// const and exact.
///
/// Enumeration order: element index = sum_i coeffs[i] * m^i where m is the
/// per-slot modulus, so slot 0 is the least significant digit. For Zpn this is
/// the usual order 0, 1, ..., p^n - 1.
class Ring {
 public:
  explicit Ring(RingSpec spec);

  static Ring parse(std::string_view text) { return Ring(RingSpec::parse(text)); }

  const RingSpec& spec() const { return spec_; }
  RingKind kind() const { return spec_.kind; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t r() const { return r_; }
  /// Chain length: x^n = 0 and x^(n-1) != 0.
  std::uint32_t n() const { return n_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t units_count() const { return size_ - size_ / q_; }
  /// |J^k| = q^(n-k).
  std::uint64_t ideal_size(std::uint32_t k) const;

  Element zero() const;
  Element one() const;
  Element uniformizer() const { return uniformizer_; }
  /// Image of an integer under Z -> R.
  Element from_int(std::int64_t v) const;
  /// Coset representatives of R/J(R), 0 first, in enumeration order.
  const std::vector<Element>& transversal() const { return transversal_; }

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::uint64_t e) const;
  /// Throws Errc::NotAUnit for elements of J(R).
  Element inv(const Element& u) const;

  bool is_zero(const Element& a) const { return a == zero(); }
  bool is_unit(const Element& a) const { return valuation(a) == 0; }
  /// Largest k with a in (x^k); valuation(0) = n.
  std::uint32_t valuation(const Element& a) const;
  /// a = unit * x^valuation with the smallest such unit in enumeration order;
  /// (1, n) for a = 0.
  UnitPart unit_part(const Element& a) const;
  /// Digits d_0..d_{n-1} from the transversal with a = sum d_i x^i.
  std::vector<Element> digit_expansion(const Element& a) const;
  Element compose_digits(std::span<const Element> digits) const;

  std::uint64_t index_of(const Element& a) const;
  Element element_at(std::uint64_t index) const;
  std::vector<Element> elements() const;
  std::vector<Element> units() const;
  /// Elements of J^k = (x^k), in enumeration order.
  std::vector<Element> ideal(std::uint32_t k) const;

  std::string format(const Element& a) const;
  Element parse_element(std::string_view text) const;

  std::string describe() const { return spec_.to_string(); }

 private:
  Element make() const;
  Element mul_field(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) const;
  void reduce_poly(std::vector<std::uint64_t>& poly, std::uint64_t mod) const;

  RingSpec spec_;
  std::uint32_t r_ = 1;
  std::uint32_t n_ = 1;
  std::uint64_t q_ = 2;
  std::uint64_t size_ = 2;
  std::uint32_t slot_modulus_ = 2;
  std::uint32_t slots_ = 1;
  Element uniformizer_;
  std::vector<Element> transversal_;
};

}  // namespace idemquat

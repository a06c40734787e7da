#include "idemquat/chainring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>

namespace idemquat {

namespace {

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::uint64_t parse_uint(std::string_view s, Errc errc, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(errc, "expected a non-negative integer for " + std::string(what) + ", got '" +
                          std::string(s) + "'");
  return v;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (v > limit / base) throw Error(Errc::InvalidSpec, "ring too large");
    v *= base;
  }
  return v;
}

std::uint32_t padic_valuation(std::uint64_t v, std::uint32_t p, std::uint32_t cap) {
  if (v == 0) return cap;
  std::uint32_t k = 0;
  while (v % p == 0 && k < cap) {
    v /= p;
    ++k;
  }
  return k;
}

// Remainder of `a` modulo monic `b` over F_p; both lowest degree first.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a, std::span<const std::uint32_t> b,
                                    std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  for (std::size_t d = a.size(); d-- > db;) {
    const std::uint64_t c = a[d];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= db; ++k) {
      std::uint64_t sub = (c * b[k]) % p;
      a[d - db + k] = static_cast<std::uint32_t>((a[d - db + k] + p - sub) % p);
    }
  }
  a.resize(std::min(a.size(), db));
  return a;
}

// Nested integer lists for element literals: value := int | '[' value {',' value} ']'.
struct Literal {
  bool is_list = false;
  std::uint64_t value = 0;
  std::vector<Literal> items;
};

Literal parse_literal(std::string_view s, std::size_t& pos) {
  Literal lit;
  if (pos < s.size() && s[pos] == '[') {
    lit.is_list = true;
    ++pos;
    if (pos < s.size() && s[pos] == ']') {
      ++pos;
      return lit;
    }
    while (true) {
      lit.items.push_back(parse_literal(s, pos));
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < s.size() && s[pos] == ']') {
        ++pos;
        return lit;
      }
      throw Error(Errc::ParseError, "malformed list literal '" + std::string(s) + "'");
    }
  }
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  lit.value = parse_uint(s.substr(start, pos - start), Errc::ParseError, "element literal");
  return lit;
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> parse_poly(std::string_view text, std::uint32_t p) {
  const std::string s = trim(text);
  if (s.empty()) throw Error(Errc::InvalidModulus, "empty polynomial");
  std::map<std::uint64_t, std::int64_t> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = s.find_first_of("+-", pos);
    if (end == std::string::npos) end = s.size();
    std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) throw Error(Errc::InvalidModulus, "malformed polynomial '" + s + "'");
    std::uint64_t coef = 1;
    std::uint64_t deg = 0;
    const std::size_t tpos = term.find('t');
    if (tpos == std::string_view::npos) {
      coef = parse_uint(term, Errc::InvalidModulus, "polynomial coefficient");
    } else {
      std::string_view c = term.substr(0, tpos);
      if (!c.empty() && c.back() == '*') c.remove_suffix(1);
      if (!c.empty()) coef = parse_uint(c, Errc::InvalidModulus, "polynomial coefficient");
      std::string_view e = term.substr(tpos + 1);
      if (e.empty()) {
        deg = 1;
      } else if (e.front() == '^') {
        deg = parse_uint(e.substr(1), Errc::InvalidModulus, "polynomial exponent");
      } else {
        throw Error(Errc::InvalidModulus, "malformed term '" + std::string(term) + "'");
      }
    }
    if (deg >= kMaxCoeffs) throw Error(Errc::InvalidModulus, "polynomial degree too large");
    terms[deg] += sign * static_cast<std::int64_t>(coef % p);
    pos = end;
  }
  std::vector<std::uint32_t> out(terms.rbegin()->first + 1, 0);
  for (auto [deg, c] : terms) {
    std::int64_t m = c % static_cast<std::int64_t>(p);
    if (m < 0) m += p;
    out[deg] = static_cast<std::uint32_t>(m);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::string format_poly(std::span<const std::uint32_t> coeffs) {
  std::string out;
  for (std::size_t d = coeffs.size(); d-- > 0;) {
    const std::uint32_t c = coeffs[d];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (d == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 't';
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return false;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Every monic polynomial of degree d, low coefficients counted base p.
    std::vector<std::uint32_t> g(d + 1, 0);
    g[d] = 1;
    while (true) {
      auto rem = poly_rem(std::vector<std::uint32_t>(f.begin(), f.end()), g, p);
      if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t c) { return c == 0; })) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

RingSpec RingSpec::parse(std::string_view text) {
  const std::string s = trim(text);
  const std::size_t colon = s.find(':');
  if (colon == std::string::npos)
    throw Error(Errc::InvalidSpec, "ring spec needs '<kind>:' prefix: '" + s + "'");
  const std::string kind = s.substr(0, colon);
  RingSpec spec;
  std::vector<std::string> allowed;
  if (kind == "zpn") {
    spec.kind = RingKind::Zpn;
    allowed = {"p", "n"};
  } else if (kind == "tp") {
    spec.kind = RingKind::TruncPoly;
    allowed = {"p", "r", "n", "f"};
  } else if (kind == "gr") {
    spec.kind = RingKind::Galois;
    allowed = {"p", "l", "r", "f"};
  } else {
    throw Error(Errc::InvalidSpec, "unknown ring kind '" + kind + "'");
  }

  std::map<std::string, std::string> kv;
  std::stringstream body(s.substr(colon + 1));
  std::string item;
  while (std::getline(body, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw Error(Errc::InvalidSpec, "expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw Error(Errc::InvalidSpec, "unknown key '" + key + "' for ring kind " + kind);
    if (!kv.emplace(key, item.substr(eq + 1)).second)
      throw Error(Errc::InvalidSpec, "duplicate key '" + key + "'");
  }

  auto number = [&](const std::string& key) -> std::uint32_t {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error(Errc::InvalidSpec, "missing key '" + key + "'");
    std::uint64_t v = parse_uint(it->second, Errc::InvalidSpec, key);
    if (v == 0 || v > std::numeric_limits<std::uint32_t>::max())
      throw Error(Errc::InvalidSpec, key + " must be a positive integer");
    return static_cast<std::uint32_t>(v);
  };

  spec.p = number("p");
  if (!is_prime(spec.p)) throw Error(Errc::NotPrime, std::to_string(spec.p) + " is not prime");
  if (spec.kind == RingKind::Zpn) {
    spec.n = number("n");
    return spec;
  }
  spec.r = number("r");
  if (spec.kind == RingKind::TruncPoly)
    spec.n = number("n");
  else
    spec.l = number("l");
  auto f = kv.find("f");
  if (f != kv.end())
    spec.modulus = parse_poly(f->second, spec.p);
  else if (spec.r == 1)
    spec.modulus = {0, 1};
  else
    throw Error(Errc::InvalidSpec, "missing key 'f'");
  return spec;
}

std::string RingSpec::to_string() const {
  switch (kind) {
    case RingKind::Zpn:
      return "zpn:p=" + std::to_string(p) + ",n=" + std::to_string(n);
    case RingKind::TruncPoly:
      return "tp:p=" + std::to_string(p) + ",r=" + std::to_string(r) + ",n=" + std::to_string(n) +
             ",f=" + format_poly(modulus);
    case RingKind::Galois:
      return "gr:p=" + std::to_string(p) + ",l=" + std::to_string(l) + ",r=" + std::to_string(r) +
             ",f=" + format_poly(modulus);
  }
  return {};
}

Ring::Ring(RingSpec spec) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p)) throw Error(Errc::NotPrime, std::to_string(spec_.p) + " is not prime");
  if (spec_.n == 0 || spec_.r == 0 || spec_.l == 0)
    throw Error(Errc::InvalidSpec, "exponents must be positive");
  constexpr std::uint64_t kSlotLimit = std::numeric_limits<std::int32_t>::max();

  if (spec_.kind == RingKind::Zpn) {
    if (!spec_.modulus.empty()) throw Error(Errc::InvalidSpec, "zpn takes no modulus");
    r_ = 1;
    n_ = spec_.n;
    slots_ = 1;
    slot_modulus_ = static_cast<std::uint32_t>(checked_pow(spec_.p, n_, kSlotLimit));
  } else {
    const auto& f = spec_.modulus;
    if (f.size() != spec_.r + 1 || f.back() != 1)
      throw Error(Errc::InvalidModulus,
                  "f = " + format_poly(f) + " is not monic of degree " + std::to_string(spec_.r));
    if (!is_irreducible_mod_p(f, spec_.p))
      throw Error(Errc::InvalidModulus,
                  "f = " + format_poly(f) + " is reducible mod " + std::to_string(spec_.p));
    r_ = spec_.r;
    if (spec_.kind == RingKind::TruncPoly) {
      n_ = spec_.n;
      slots_ = n_ * r_;
      slot_modulus_ = spec_.p;
    } else {
      n_ = spec_.l;
      slots_ = r_;
      slot_modulus_ = static_cast<std::uint32_t>(checked_pow(spec_.p, n_, kSlotLimit));
    }
  }
  if (slots_ > kMaxCoeffs)
    throw Error(Errc::InvalidSpec, "more than " + std::to_string(kMaxCoeffs) + " coefficients");
  constexpr std::uint64_t kSizeLimit = std::uint64_t{1} << 62;
  q_ = checked_pow(spec_.p, r_, kSizeLimit);
  size_ = checked_pow(slot_modulus_, slots_, kSizeLimit);

  uniformizer_ = make();
  if (spec_.kind == RingKind::TruncPoly) {
    if (n_ > 1) uniformizer_.coeffs[r_] = 1;
  } else {
    uniformizer_.coeffs[0] = spec_.p % slot_modulus_;
  }

  // Transversal: r base-p digits placed in the constant slots.
  const std::uint64_t tcount = q_;
  transversal_.reserve(tcount);
  for (std::uint64_t t = 0; t < tcount; ++t) {
    Element e = make();
    std::uint64_t rest = t;
    const std::uint32_t width = spec_.kind == RingKind::Zpn ? 1 : r_;
    for (std::uint32_t j = 0; j < width; ++j) {
      e.coeffs[j] = static_cast<std::uint32_t>(rest % spec_.p);
      rest /= spec_.p;
    }
    transversal_.push_back(e);
  }

  if (!is_zero(pow(uniformizer_, n_)) || is_zero(pow(uniformizer_, n_ - 1)))
    throw Error(Errc::InvalidSpec, "uniformizer does not have nilpotency index n");
}

std::uint64_t Ring::ideal_size(std::uint32_t k) const {
  if (k > n_) throw Error(Errc::InvalidSpec, "ideal exponent exceeds chain length");
  std::uint64_t v = 1;
  for (std::uint32_t i = k; i < n_; ++i) v *= q_;
  return v;
}

Element Ring::make() const {
  Element e;
  e.length = static_cast<std::uint8_t>(slots_);
  return e;
}

Element Ring::zero() const { return make(); }

Element Ring::one() const {
  Element e = make();
  e.coeffs[0] = 1 % slot_modulus_;
  return e;
}

Element Ring::from_int(std::int64_t v) const {
  const std::int64_t m = spec_.kind == RingKind::TruncPoly ? spec_.p : slot_modulus_;
  std::int64_t c = v % m;
  if (c < 0) c += m;
  Element e = make();
  e.coeffs[0] = static_cast<std::uint32_t>(c);
  return e;
}

Element Ring::add(const Element& a, const Element& b) const {
  Element out = make();
  for (std::uint32_t i = 0; i < slots_; ++i) {
    std::uint64_t s = std::uint64_t{a.coeffs[i]} + b.coeffs[i];
    out.coeffs[i] = static_cast<std::uint32_t>(s >= slot_modulus_ ? s - slot_modulus_ : s);
  }
  return out;
}

Element Ring::neg(const Element& a) const {
  Element out = make();
  for (std::uint32_t i = 0; i < slots_; ++i)
    out.coeffs[i] = a.coeffs[i] == 0 ? 0 : slot_modulus_ - a.coeffs[i];
  return out;
}

Element Ring::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

void Ring::reduce_poly(std::vector<std::uint64_t>& poly, std::uint64_t mod) const {
  const auto& f = spec_.modulus;
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = poly.size(); d-- > deg;) {
    const std::uint64_t c = poly[d] % mod;
    poly[d] = 0;
    if (c == 0) continue;
    for (std::size_t k = 0; k < deg; ++k) {
      const std::uint64_t sub = (c * f[k]) % mod;
      poly[d - deg + k] = (poly[d - deg + k] % mod + mod - sub) % mod;
    }
  }
}

// Product in GF(q) = F_p[t]/(f) of two r-slot coefficient blocks.
Element Ring::mul_field(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) const {
  const std::uint64_t p = spec_.p;
  std::vector<std::uint64_t> prod(2 * r_ - 1, 0);
  for (std::uint32_t i = 0; i < r_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  reduce_poly(prod, p);
  Element out;
  for (std::uint32_t i = 0; i < r_; ++i) out.coeffs[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

Element Ring::mul(const Element& a, const Element& b) const {
  Element out = make();
  switch (spec_.kind) {
    case RingKind::Zpn:
      out.coeffs[0] =
          static_cast<std::uint32_t>((std::uint64_t{a.coeffs[0]} * b.coeffs[0]) % slot_modulus_);
      break;
    case RingKind::Galois: {
      const std::uint64_t m = slot_modulus_;
      std::vector<std::uint64_t> prod(2 * r_ - 1, 0);
      for (std::uint32_t i = 0; i < r_; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::uint32_t j = 0; j < r_; ++j)
          prod[i + j] = (prod[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % m;
      }
      reduce_poly(prod, m);
      for (std::uint32_t i = 0; i < r_; ++i) out.coeffs[i] = static_cast<std::uint32_t>(prod[i]);
      break;
    }
    case RingKind::TruncPoly: {
      const std::uint32_t p = spec_.p;
      for (std::uint32_t i = 0; i < n_; ++i) {
        std::span<const std::uint32_t> ai(a.coeffs.data() + i * r_, r_);
        if (std::all_of(ai.begin(), ai.end(), [](std::uint32_t c) { return c == 0; })) continue;
        for (std::uint32_t j = 0; i + j < n_; ++j) {
          Element c = mul_field(ai, std::span<const std::uint32_t>(b.coeffs.data() + j * r_, r_));
          for (std::uint32_t s = 0; s < r_; ++s) {
            std::uint32_t& slot = out.coeffs[(i + j) * r_ + s];
            slot = (slot + c.coeffs[s]) % p;
          }
        }
      }
      break;
    }
  }
  return out;
}

Element Ring::pow(const Element& a, std::uint64_t e) const {
  Element result = one();
  Element base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Element Ring::inv(const Element& u) const {
  if (!is_unit(u)) throw Error(Errc::NotAUnit, format(u) + " lies in J(R)");
  // U(R) has order q^(n-1)(q-1).
  return pow(u, units_count() - 1);
}

std::uint32_t Ring::valuation(const Element& a) const {
  switch (spec_.kind) {
    case RingKind::Zpn:
      return padic_valuation(a.coeffs[0], spec_.p, n_);
    case RingKind::Galois: {
      std::uint32_t v = n_;
      for (std::uint32_t i = 0; i < r_; ++i) v = std::min(v, padic_valuation(a.coeffs[i], spec_.p, n_));
      return v;
    }
    case RingKind::TruncPoly:
      for (std::uint32_t i = 0; i < n_; ++i)
        for (std::uint32_t s = 0; s < r_; ++s)
          if (a.coeffs[i * r_ + s] != 0) return i;
      return n_;
  }
  return n_;
}

UnitPart Ring::unit_part(const Element& a) const {
  const std::uint32_t v = valuation(a);
  if (v == n_) return {one(), n_};
  // Dividing out x^v leaves the digits below n - v, which is the least
  // representative of the coset u + Ann(x^v).
  Element u = make();
  switch (spec_.kind) {
    case RingKind::Zpn:
    case RingKind::Galois: {
      std::uint64_t pv = 1;
      for (std::uint32_t i = 0; i < v; ++i) pv *= spec_.p;
      for (std::uint32_t i = 0; i < slots_; ++i) u.coeffs[i] = static_cast<std::uint32_t>(a.coeffs[i] / pv);
      break;
    }
    case RingKind::TruncPoly:
      for (std::uint32_t i = v * r_; i < slots_; ++i) u.coeffs[i - v * r_] = a.coeffs[i];
      break;
  }
  return {u, v};
}

std::vector<Element> Ring::digit_expansion(const Element& a) const {
  std::vector<Element> digits(n_, make());
  switch (spec_.kind) {
    case RingKind::Zpn:
    case RingKind::Galois:
      for (std::uint32_t s = 0; s < slots_; ++s) {
        std::uint64_t c = a.coeffs[s];
        for (std::uint32_t i = 0; i < n_; ++i) {
          digits[i].coeffs[s] = static_cast<std::uint32_t>(c % spec_.p);
          c /= spec_.p;
        }
      }
      break;
    case RingKind::TruncPoly:
      for (std::uint32_t i = 0; i < n_; ++i)
        for (std::uint32_t s = 0; s < r_; ++s) digits[i].coeffs[s] = a.coeffs[i * r_ + s];
      break;
  }
  return digits;
}

Element Ring::compose_digits(std::span<const Element> digits) const {
  Element acc = zero();
  Element xi = one();
  for (const Element& d : digits) {
    acc = add(acc, mul(d, xi));
    xi = mul(xi, uniformizer_);
  }
  return acc;
}

std::uint64_t Ring::index_of(const Element& a) const {
  std::uint64_t idx = 0;
  for (std::uint32_t i = slots_; i-- > 0;) idx = idx * slot_modulus_ + a.coeffs[i];
  return idx;
}

Element Ring::element_at(std::uint64_t index) const {
  if (index >= size_) throw Error(Errc::InvalidSpec, "element index out of range");
  Element e = make();
  for (std::uint32_t i = 0; i < slots_; ++i) {
    e.coeffs[i] = static_cast<std::uint32_t>(index % slot_modulus_);
    index /= slot_modulus_;
  }
  return e;
}

std::vector<Element> Ring::elements() const {
  std::vector<Element> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(element_at(i));
  return out;
}

std::vector<Element> Ring::units() const {
  std::vector<Element> out;
  out.reserve(units_count());
  for (std::uint64_t i = 0; i < size_; ++i) {
    Element e = element_at(i);
    if (is_unit(e)) out.push_back(e);
  }
  return out;
}

std::vector<Element> Ring::ideal(std::uint32_t k) const {
  std::vector<Element> out;
  out.reserve(ideal_size(k));
  for (std::uint64_t i = 0; i < size_; ++i) {
    Element e = element_at(i);
    if (valuation(e) >= k) out.push_back(e);
  }
  return out;
}

std::string Ring::format(const Element& a) const {
  auto list = [](auto begin, auto end) {
    std::string s = "[";
    for (auto it = begin; it != end; ++it) {
      if (it != begin) s += ',';
      s += std::to_string(*it);
    }
    return s + "]";
  };
  switch (spec_.kind) {
    case RingKind::Zpn:
      return std::to_string(a.coeffs[0]);
    case RingKind::Galois:
      return list(a.coeffs.begin(), a.coeffs.begin() + slots_);
    case RingKind::TruncPoly: {
      if (r_ == 1) return list(a.coeffs.begin(), a.coeffs.begin() + slots_);
      std::string s = "[";
      for (std::uint32_t i = 0; i < n_; ++i) {
        if (i) s += ',';
        s += list(a.coeffs.begin() + i * r_, a.coeffs.begin() + (i + 1) * r_);
      }
      return s + "]";
    }
  }
  return {};
}

Element Ring::parse_element(std::string_view text) const {
  const std::string s = trim(text);
  std::size_t pos = 0;
  Literal lit = parse_literal(s, pos);
  if (pos != s.size()) throw Error(Errc::ParseError, "trailing characters in '" + s + "'");

  auto bad = [&](const std::string& why) { return Error(Errc::ParseError, why + " in '" + s + "'"); };
  Element e = make();
  if (!lit.is_list) {
    const std::uint64_t limit = spec_.kind == RingKind::TruncPoly ? spec_.p : slot_modulus_;
    if (lit.value >= limit) throw bad("integer out of range");
    e.coeffs[0] = static_cast<std::uint32_t>(lit.value);
    return e;
  }
  if (spec_.kind == RingKind::Zpn) throw bad("zpn elements are plain integers");

  if (spec_.kind == RingKind::Galois) {
    if (lit.items.size() > r_) throw bad("too many coefficients");
    for (std::size_t i = 0; i < lit.items.size(); ++i) {
      const Literal& it = lit.items[i];
      if (it.is_list || it.value >= slot_modulus_) throw bad("coefficient out of range");
      e.coeffs[i] = static_cast<std::uint32_t>(it.value);
    }
    return e;
  }

  if (lit.items.size() > n_) throw bad("too many coefficients");
  for (std::size_t i = 0; i < lit.items.size(); ++i) {
    const Literal& it = lit.items[i];
    if (it.is_list) {
      if (it.items.size() > r_) throw bad("too many field coefficients");
      for (std::size_t s2 = 0; s2 < it.items.size(); ++s2) {
        if (it.items[s2].is_list || it.items[s2].value >= spec_.p) throw bad("field coefficient out of range");
        e.coeffs[i * r_ + s2] = static_cast<std::uint32_t>(it.items[s2].value);
      }
    } else {
      // A field element packed as an integer in [0, q), base-p digits.
      if (it.value >= q_) throw bad("field element out of range");
      std::uint64_t rest = it.value;
      for (std::uint32_t s2 = 0; s2 < r_; ++s2) {
        e.coeffs[i * r_ + s2] = static_cast<std::uint32_t>(rest % spec_.p);
        rest /= spec_.p;
      }
    }
  }
  return e;
}

}  // namespace idemquat

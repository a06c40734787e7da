#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "idemquat/chainring.hpp"
#include "test_support.hpp"

using namespace idemquat;

namespace {

Element z(const Ring& R, std::int64_t v) { return R.from_int(v); }

std::vector<std::int64_t> as_ints(const Ring& R, const std::vector<Element>& xs) {
  std::vector<std::int64_t> out;
  for (const auto& x : xs) out.push_back(static_cast<std::int64_t>(R.index_of(x)));
  return out;
}

}  // namespace

TEST_CASE("ring_make: Z/9") {
  const Ring R = Ring::parse("zpn:p=3,n=2");
  CHECK(R.q() == 3);
  CHECK(R.n() == 2);
  CHECK(R.size() == 9);
  CHECK(R.uniformizer() == z(R, 3));
  CHECK(R.transversal().size() == 3);
  CHECK(R.transversal().front() == R.zero());
}

TEST_CASE("ring_make: residue field F_3 as a truncated polynomial ring") {
  const Ring R = Ring::parse("tp:p=3,r=1,n=1,f=t");
  CHECK(R.n() == 1);
  CHECK(R.size() == 3);
  CHECK(R.uniformizer() == R.zero());
  CHECK(R.units_count() == 2);
}

TEST_CASE("ring_make: spec errors") {
  auto code_of = [](const char* spec) {
    try {
      Ring::parse(spec);
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("expected an error for ", spec);
    return Errc::ParseError;
  };
  CHECK(code_of("zpn:p=4,n=1") == Errc::NotPrime);
  CHECK(code_of("gr:p=9,l=2,r=1,f=t") == Errc::NotPrime);
  // t^2 + 1 = (t + 1)^2 mod 2 and (t + 2)(t + 3) mod 5.
  CHECK(code_of("tp:p=2,r=2,n=1,f=t^2+1") == Errc::InvalidModulus);
  CHECK(code_of("tp:p=5,r=2,n=1,f=t^2+1") == Errc::InvalidModulus);
  CHECK(code_of("tp:p=3,r=2,n=1,f=2t^2+1") == Errc::InvalidModulus);
  CHECK(code_of("tp:p=3,r=3,n=1,f=t^2+1") == Errc::InvalidModulus);
  CHECK(code_of("zpn:p=3") == Errc::InvalidSpec);
  CHECK(code_of("zpn:p=3,n=2,r=1") == Errc::InvalidSpec);
  CHECK(code_of("zpn:p=3,n=0") == Errc::InvalidSpec);
  CHECK(code_of("foo:p=3,n=2") == Errc::InvalidSpec);
  CHECK(code_of("tp:p=3,r=2,n=1") == Errc::InvalidSpec);
}

TEST_CASE("spec strings round-trip through the canonical form") {
  for (const auto& spec : testing::small_ring_specs()) {
    CAPTURE(spec);
    const Ring R = Ring::parse(spec);
    CHECK(R.describe() == spec);
    CHECK(Ring::parse(R.describe()).describe() == spec);
  }
  CHECK(Ring::parse(" tp:p=3, r=2, n=1, f=t^2 + 0t + 1 ").describe() == "tp:p=3,r=2,n=1,f=t^2+1");
  CHECK(Ring::parse("gr:p=3,l=2,r=2,f=t^2-2").describe() == "gr:p=3,l=2,r=2,f=t^2+1");
}

TEST_CASE("irreducibility over F_p") {
  CHECK(is_irreducible_mod_p(std::vector<std::uint32_t>{1, 1, 1}, 2));
  CHECK_FALSE(is_irreducible_mod_p(std::vector<std::uint32_t>{1, 0, 1}, 2));
  CHECK(is_irreducible_mod_p(std::vector<std::uint32_t>{1, 1, 0, 1}, 2));
  CHECK(is_irreducible_mod_p(std::vector<std::uint32_t>{2, 2, 1}, 3));
  // t^4 + t^2 + 1 = (t^2 + t + 1)^2 over F_2: no roots, still reducible.
  CHECK_FALSE(is_irreducible_mod_p(std::vector<std::uint32_t>{1, 0, 1, 0, 1}, 2));
  CHECK(is_irreducible_mod_p(std::vector<std::uint32_t>{1, 1, 0, 0, 1}, 2));
}

TEST_CASE("arithmetic in Z/9") {
  const Ring R = Ring::parse("zpn:p=3,n=2");
  CHECK(R.mul(z(R, 4), z(R, 7)) == R.one());
  CHECK(R.inv(z(R, 4)) == z(R, 7));
  CHECK(R.add(z(R, 5), z(R, 7)) == z(R, 3));
  CHECK(R.sub(z(R, 2), z(R, 7)) == z(R, 4));
  CHECK(R.neg(z(R, 1)) == z(R, 8));
  CHECK_THROWS_AS(R.inv(z(R, 3)), Error);
  try {
    R.inv(z(R, 3));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAUnit);
  }
}

TEST_CASE("is_unit, valuation, unit_part, digit_expansion examples") {
  const Ring R9 = Ring::parse("zpn:p=3,n=2");
  const Ring R27 = Ring::parse("zpn:p=3,n=3");
  CHECK(R9.is_unit(z(R9, 4)));
  CHECK_FALSE(R9.is_unit(z(R9, 6)));
  CHECK_FALSE(R9.is_unit(R9.zero()));

  CHECK(R9.valuation(z(R9, 3)) == 1);
  CHECK(R9.valuation(R9.zero()) == 2);
  CHECK(R27.valuation(z(R27, 18)) == 2);

  auto up = R9.unit_part(z(R9, 6));
  CHECK(up.unit == z(R9, 2));
  CHECK(up.valuation == 1);
  up = R9.unit_part(z(R9, 4));
  CHECK(up.unit == z(R9, 4));
  CHECK(up.valuation == 0);
  up = R9.unit_part(R9.zero());
  CHECK(up.unit == R9.one());
  CHECK(up.valuation == 2);

  CHECK(as_ints(R9, R9.digit_expansion(z(R9, 7))) == std::vector<std::int64_t>{1, 2});
  CHECK(as_ints(R9, R9.digit_expansion(R9.zero())) == std::vector<std::int64_t>{0, 0});
  CHECK(as_ints(R27, R27.digit_expansion(z(R27, 25))) == std::vector<std::int64_t>{1, 2, 2});
}

TEST_CASE("ideal and unit enumeration") {
  const Ring R = Ring::parse("zpn:p=3,n=2");
  CHECK(as_ints(R, R.ideal(1)) == std::vector<std::int64_t>{0, 3, 6});
  CHECK(R.units().size() == 6);
  CHECK(R.ideal(2) == std::vector<Element>{R.zero()});
  CHECK(R.ideal(0).size() == 9);
}

TEST_CASE("Galois ring GR(4, 2)") {
  const Ring R = Ring::parse("gr:p=2,l=2,r=2,f=t^2+t+1");
  CHECK(R.q() == 4);
  CHECK(R.n() == 2);
  CHECK(R.size() == 16);
  CHECK(R.units().size() == 12);
  const Element t = R.parse_element("[0,1]");
  // t^2 = -t - 1 = 3t + 3 in Z/4[t]/(t^2+t+1), and t^3 = 1.
  CHECK(R.mul(t, t) == R.parse_element("[3,3]"));
  CHECK(R.pow(t, 3) == R.one());
  CHECK(R.uniformizer() == R.from_int(2));
}

TEST_CASE("GF(9) is a field") {
  const Ring R = Ring::parse("tp:p=3,r=2,n=1,f=t^2+1");
  CHECK(R.size() == 9);
  for (const Element& a : R.elements()) {
    if (R.is_zero(a)) continue;
    CHECK(R.mul(a, R.inv(a)) == R.one());
  }
}

TEST_CASE("property: ring axioms") {
  std::mt19937_64 rng(7);
  for (const auto& spec : testing::small_ring_specs()) {
    CAPTURE(spec);
    const Ring R = Ring::parse(spec);
    const auto elems = R.elements();
    auto check = [&](const Element& a, const Element& b, const Element& c) {
      REQUIRE(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)));
      REQUIRE(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
      REQUIRE(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
      REQUIRE(R.mul(a, b) == R.mul(b, a));
      REQUIRE(R.add(a, b) == R.add(b, a));
    };
    if (R.size() <= 81) {
      for (const auto& a : elems)
        for (const auto& b : elems)
          for (const auto& c : elems) check(a, b, c);
    } else {
      std::uniform_int_distribution<std::size_t> d(0, elems.size() - 1);
      for (int i = 0; i < 20000; ++i) check(elems[d(rng)], elems[d(rng)], elems[d(rng)]);
    }
    for (const auto& a : elems) {
      REQUIRE(R.add(a, R.zero()) == a);
      REQUIRE(R.mul(a, R.one()) == a);
      REQUIRE(R.add(a, R.neg(a)) == R.zero());
    }
  }
}

TEST_CASE("property: units are exactly the invertible elements") {
  for (const auto& spec : testing::small_ring_specs()) {
    CAPTURE(spec);
    const Ring R = Ring::parse(spec);
    const auto elems = R.elements();
    for (const auto& a : elems) {
      const bool invertible =
          std::any_of(elems.begin(), elems.end(), [&](const Element& b) { return R.mul(a, b) == R.one(); });
      REQUIRE(R.is_unit(a) == invertible);
      if (invertible) REQUIRE(R.mul(a, R.inv(a)) == R.one());
    }
    CHECK(R.units().size() == R.units_count());
  }
}

TEST_CASE("property: unit plus radical is a unit") {
  std::vector<std::string> specs = testing::small_ring_specs();
  specs.push_back("zpn:p=3,n=6");
  specs.push_back("zpn:p=3,n=5");
  for (const auto& spec : specs) {
    CAPTURE(spec);
    const Ring R = Ring::parse(spec);
    REQUIRE(R.size() <= 729);
    const auto radical = R.ideal(1);
    for (const auto& u : R.units())
      for (const auto& a : radical) REQUIRE(R.is_unit(R.add(u, a)));
  }
}

TEST_CASE("property: ideal chain sizes and the uniformizer") {
  for (const auto& spec : testing::small_ring_specs()) {
    CAPTURE(spec);
    const Ring R = Ring::parse(spec);
    std::uint64_t expected = R.size();
    for (std::uint32_t k = 0; k <= R.n(); ++k) {
      const auto ideal = R.ideal(k);
      CHECK(ideal.size() == expected);
      CHECK(R.ideal_size(k) == expected);
      // (x^k) = x^k R, computed by multiplication.
      std::set<Element> generated;
      const Element xk = R.pow(R.uniformizer(), k);
      for (const auto& a : R.elements()) generated.insert(R.mul(xk, a));
      CHECK(generated == std::set<Element>(ideal.begin(), ideal.end()));
      expected /= R.q();
    }
    CHECK(R.is_zero(R.pow(R.uniformizer(), R.n())));
    CHECK_FALSE(R.is_zero(R.pow(R.uniformizer(), R.n() - 1)));
  }
}

TEST_CASE("property: valuation is multiplicative up to the cap") {
  for (const auto& spec : testing::small_ring_specs()) {
    CAPTURE(spec);
    const Ring R = Ring::parse(spec);
    if (R.size() > 81) continue;
    const auto elems = R.elements();
    for (const auto& a : elems)
      for (const auto& b : elems)
        REQUIRE(R.valuation(R.mul(a, b)) == std::min(R.valuation(a) + R.valuation(b), R.n()));
  }
}

TEST_CASE("property: digit expansion and unit part reconstruct every element") {
  for (const auto& spec : testing::small_ring_specs()) {
    CAPTURE(spec);
    const Ring R = Ring::parse(spec);
    const auto& T = R.transversal();
    CHECK(T.size() == R.q());
    // Distinct residues mod J.
    for (std::size_t i = 0; i < T.size(); ++i)
      for (std::size_t j = i + 1; j < T.size(); ++j) CHECK(R.valuation(R.sub(T[i], T[j])) == 0);

    const auto units = R.units();
    for (const auto& a : R.elements()) {
      const auto digits = R.digit_expansion(a);
      REQUIRE(digits.size() == R.n());
      for (const auto& d : digits) REQUIRE(std::find(T.begin(), T.end(), d) != T.end());
      REQUIRE(R.compose_digits(digits) == a);

      const auto [u, v] = R.unit_part(a);
      REQUIRE(v == R.valuation(a));
      REQUIRE(R.is_unit(u));
      REQUIRE(R.mul(u, R.pow(R.uniformizer(), v)) == a);
      // Least unit in enumeration order with u x^v = a.
      const Element xv = R.pow(R.uniformizer(), v);
      const auto first = std::find_if(units.begin(), units.end(),
                                      [&](const Element& w) { return R.mul(w, xv) == a; });
      REQUIRE(first != units.end());
      REQUIRE(*first == u);
    }
  }
}

TEST_CASE("property: element literals round-trip") {
  for (const auto& spec : testing::small_ring_specs()) {
    CAPTURE(spec);
    const Ring R = Ring::parse(spec);
    std::uint64_t i = 0;
    for (const auto& a : R.elements()) {
      REQUIRE(R.parse_element(R.format(a)) == a);
      REQUIRE(R.index_of(a) == i);
      REQUIRE(R.element_at(i) == a);
      ++i;
    }
  }
}

TEST_CASE("element literal forms") {
  const Ring R9 = Ring::parse("zpn:p=3,n=2");
  CHECK(R9.parse_element(" 7 ") == R9.from_int(7));
  CHECK_THROWS_AS(R9.parse_element("9"), Error);
  CHECK_THROWS_AS(R9.parse_element("[1]"), Error);
  CHECK_THROWS_AS(R9.parse_element("-1"), Error);

  const Ring G = Ring::parse("tp:p=3,r=2,n=2,f=t^2+1");
  const Element e = G.parse_element("[[1,2],[0,1]]");
  CHECK(G.format(e) == "[[1,2],[0,1]]");
  // Packed field coefficients: 7 = 1 + 2*3.
  CHECK(G.parse_element("[7,3]") == e);
  CHECK(G.parse_element("[[1,2]]") == G.parse_element("[[1,2],[0,0]]"));
  CHECK(G.parse_element("2") == G.from_int(2));
  CHECK_THROWS_AS(G.parse_element("[[1,2],[0,1],[0,0]]"), Error);
  CHECK_THROWS_AS(G.parse_element("[9,0]"), Error);
  CHECK_THROWS_AS(G.parse_element("[[1,2],[0,1]"), Error);
}

#pragma once

// Closed-form counts, the brute-force oracles that check them, and the report
// that records which formula variant survives.
//
// Brute force is authoritative. Formula variants are hypotheses and a report
// names the variant that matches the exhaustive count, CONFLICT when none
// does, UNDECIDED when several do.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "idemquat/bigint.hpp"
#include "idemquat/chainring.hpp"
#include "idemquat/mat2.hpp"

namespace idemquat {

enum class Target { H, M2 };

std::string_view target_name(Target t);
Target parse_target(std::string_view s);

enum class IdempotentVariant { Paper, Alt };
enum class ProductsVariant { Closed, OrbitsumStatement, OrbitsumProof };

std::string_view variant_name(IdempotentVariant v);
std::string_view variant_name(ProductsVariant v);

struct Caps {
  /// Largest carrier (q^(4n) elements) an exhaustive sweep may index.
  std::uint64_t carrier = std::uint64_t{1} << 24;
  /// Largest |S_r| * |S_1| product sweep.
  std::uint64_t pair_products = std::uint64_t{1} << 32;

  /// Defaults, with the carrier cap taken from IDEMQUAT_CAP when set.
  static Caps from_env();
};

namespace census {

/// |I(H(R))| or |I(M_2(R))|. PAPER: 2 + q^(3n-2)(q^2-1); ALT: 2 + q^(2n-1)(q+1),
/// the size of the orbit of diag(1, 0) plus the two trivial idempotents.
/// H(R) with p = 2 has only 0 and 1.
BigInt count_idempotents_formula(std::uint64_t q, std::uint32_t n, std::uint32_t p, IdempotentVariant variant,
                                 Target target = Target::H);

/// Number of products of idempotents. CLOSED is the closed form
/// q^(2n) - q^(n+1) + ((q+2) q^(3n+1) + q^3 + q^2 + 1) / (q^2 + q + 1); the
/// ORBITSUM variants add 1 (the identity) to the sizes of all M(a, b) orbits.
/// H(R) with q even gives 2. Throws Errc::NonIntegralFormula.
BigInt count_products_formula(std::uint64_t q, std::uint32_t n, ProductsVariant variant,
                              Target target = Target::H);

/// (15 a^3 + 13 a^2 - 39 a + 37) / 13 with a = 3^n.
BigInt example_formula_alpha(std::uint32_t n);

/// Carrier indices of all idempotents, ascending.
std::vector<std::uint64_t> brute_idempotents(const Ring& R, Target target, const Caps& caps = {});

struct ProductsCensus {
  /// sets[r - 1] = S_r as ascending carrier indices.
  std::vector<std::vector<std::uint64_t>> sets;
  /// Least r with S_(r+1) = S_r, if reached within r_max.
  std::optional<std::uint32_t> stable_at;

  std::uint64_t size(std::uint32_t r) const { return sets.at(r - 1).size(); }
  bool contains(std::uint32_t r, std::uint64_t index) const;
};

/// S_1 = idempotents, S_(r+1) = { s e : s in S_r, e in S_1 }, up to r_max.
ProductsCensus brute_products_census(const Ring& R, Target target, std::uint32_t r_max,
                                     const Caps& caps = {});

/// Closure of X under conjugation by E12(t), E21(t) (t in R) and diag(u, 1)
/// (u a unit), as ascending M_2 carrier indices.
std::vector<std::uint64_t> brute_orbit(const Ring& R, const Mat2& X, const Caps& caps = {});
std::uint64_t brute_orbit_size(const Ring& R, const OrbitLabel& label, const Caps& caps = {});

/// Number of 2x2 matrices with unit determinant, by enumeration.
std::uint64_t brute_gl2_count(const Ring& R, const Caps& caps = {});

struct Verdict {
  std::string verdict;
  std::vector<std::string> matching;
};

Verdict adjudicate(const BigInt& brute, const std::vector<std::pair<std::string, BigInt>>& candidates);

struct OrbitRow {
  OrbitLabel label;
  BigInt size_statement;
  BigInt size_proof;
  std::optional<BigInt> size_brute;
  std::optional<Verdict> verdict;
};

struct CensusReport {
  std::string ring;
  Target target = Target::H;

  BigInt idempotents_brute;
  BigInt idempotents_formula_paper;
  BigInt idempotents_formula_alt;
  BigInt products_brute;
  BigInt products_closed_form;
  BigInt products_orbitsum_statement;
  BigInt products_orbitsum_proof;
  BigInt gl2_brute;
  BigInt gl2_formula;
  std::optional<std::uint32_t> closure_stable_at_r;
  std::vector<BigInt> products_per_r;
  BigInt products_noninvertible_brute;
  BigInt noninvertible_total_brute;

  std::vector<OrbitRow> orbit_table;
  std::map<std::string, Verdict> verdicts;
};

CensusReport run_verification(const Ring& R, Target target = Target::H, std::uint32_t r_max = 8,
                              const Caps& caps = {});

nlohmann::ordered_json to_json(const Ring& R, const CensusReport& report);

}  // namespace census
}  // namespace idemquat

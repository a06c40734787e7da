#include "idemquat/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "idemquat/dense_ring.hpp"

namespace idemquat {

std::string_view target_name(Target t) { return t == Target::H ? "h" : "m2"; }

Target parse_target(std::string_view s) {
  if (s == "h") return Target::H;
  if (s == "m2") return Target::M2;
  throw Error(Errc::ParseError, "target must be 'h' or 'm2', got '" + std::string(s) + "'");
}

std::string_view variant_name(IdempotentVariant v) { return v == IdempotentVariant::Paper ? "PAPER" : "ALT"; }

std::string_view variant_name(ProductsVariant v) {
  switch (v) {
    case ProductsVariant::Closed: return "CLOSED";
    case ProductsVariant::OrbitsumStatement: return "ORBITSUM_STATEMENT";
    case ProductsVariant::OrbitsumProof: return "ORBITSUM_PROOF";
  }
  return "";
}

Caps Caps::from_env() {
  Caps caps;
  if (const char* env = std::getenv("IDEMQUAT_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw Error(Errc::ParseError, "IDEMQUAT_CAP must be a positive integer");
    caps.carrier = v;
  }
  return caps;
}

namespace census {

namespace {

// Dense bit set over a carrier.
class BitSet {
 public:
  explicit BitSet(std::uint64_t n) : words_((n + 63) / 64, 0) {}
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  bool set(std::uint64_t i) {
    std::uint64_t& w = words_[i >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    const bool fresh = (w & bit) == 0;
    w |= bit;
    return fresh;
  }
  void merge(const BitSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  }
  std::vector<std::uint64_t> members() const {
    std::vector<std::uint64_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        out.push_back(w * 64 + static_cast<std::uint64_t>(__builtin_ctzll(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> words_;
};

void check_carrier(const Carrier& C, const Caps& caps, const Ring& R) {
  if (C.count() > caps.carrier)
    throw Error(Errc::CapExceeded, "carrier of " + R.describe() + " has " + std::to_string(C.count()) +
                                       " elements, cap is " + std::to_string(caps.carrier));
}

Quad multiply(const Carrier& C, Target target, const Quad& x, const Quad& y) {
  return target == Target::H ? C.quat_mul(x, y) : C.mat_mul(x, y);
}

bool is_unit_quad(const DenseRing& D, const Carrier& C, Target target, const Quad& x) {
  return D.is_unit(target == Target::H ? C.quat_norm(x) : C.mat_det(x));
}

// All products s * e for s in `left`, e in `right`. Blocks of `left` go to
// separate workers; the union is independent of scheduling.
std::vector<std::uint64_t> product_sweep(const Carrier& C, Target target, const std::vector<std::uint64_t>& left,
                                         const std::vector<Quad>& right) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, left.size() / 512 + 1);
  std::vector<BitSet> marks(workers, BitSet(C.count()));
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < left.size(); i += workers) {
      const Quad s = C.unpack(left[i]);
      for (const Quad& e : right) marks[w].set(C.pack(multiply(C, target, s, e)));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (std::size_t w = 1; w < workers; ++w) marks[0].merge(marks[w]);
  return marks[0].members();
}

}  // namespace

BigInt count_idempotents_formula(std::uint64_t q, std::uint32_t n, std::uint32_t p, IdempotentVariant variant,
                                 Target target) {
  if (target == Target::H && p == 2) return 2;
  const BigInt Q = q;
  if (variant == IdempotentVariant::Paper) return 2 + ipow(Q, 3 * std::uint64_t{n} - 2) * (Q * Q - 1);
  return 2 + ipow(Q, 2 * std::uint64_t{n} - 1) * (Q + 1);
}

BigInt count_products_formula(std::uint64_t q, std::uint32_t n, ProductsVariant variant, Target target) {
  if (target == Target::H && q % 2 == 0) return 2;
  const BigInt Q = q;
  if (variant == ProductsVariant::Closed) {
    const BigInt num = (Q + 2) * ipow(Q, 3 * std::uint64_t{n} + 1) + Q * Q * Q + Q * Q + 1;
    const BigInt den = Q * Q + Q + 1;
    if (num % den != 0)
      throw Error(Errc::NonIntegralFormula, num.str() + " is not divisible by " + den.str());
    return ipow(Q, 2 * std::uint64_t{n}) - ipow(Q, std::uint64_t{n} + 1) + num / den;
  }
  const OrbitVariant ov =
      variant == ProductsVariant::OrbitsumStatement ? OrbitVariant::Statement : OrbitVariant::Proof;
  using BClass = OrbitLabel::BClass;
  // The identity plus the zero matrix.
  BigInt total = 2;
  for (std::uint32_t k = 0; k < n; ++k) total += mat::orbit_size_formula(q, n, n, BClass::Power, k, ov);
  for (std::uint32_t l = 0; l < n; ++l) {
    // q^(n-l-1)(q-1) elements a have valuation exactly l.
    const BigInt multiplicity = ipow(Q, std::uint64_t{n} - l - 1) * (Q - 1);
    BigInt per_a = mat::orbit_size_formula(q, n, l, BClass::Zero, 0, ov);
    for (std::uint32_t k = 0; k < l; ++k) per_a += mat::orbit_size_formula(q, n, l, BClass::Power, k, ov);
    total += multiplicity * per_a;
  }
  return total;
}

BigInt example_formula_alpha(std::uint32_t n) {
  const BigInt a = ipow(BigInt(3), n);
  const BigInt num = 15 * a * a * a + 13 * a * a - 39 * a + 37;
  if (num % 13 != 0) throw Error(Errc::NonIntegralFormula, num.str() + " is not divisible by 13");
  return num / 13;
}

std::vector<std::uint64_t> brute_idempotents(const Ring& R, Target target, const Caps& caps) {
  const DenseRing D(R);
  const Carrier C(D);
  check_carrier(C, caps, R);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < C.count(); ++i) {
    const Quad x = C.unpack(i);
    if (multiply(C, target, x, x) == x) out.push_back(i);
  }
  return out;
}

bool ProductsCensus::contains(std::uint32_t r, std::uint64_t index) const {
  const auto& s = sets.at(r - 1);
  return std::binary_search(s.begin(), s.end(), index);
}

ProductsCensus brute_products_census(const Ring& R, Target target, std::uint32_t r_max, const Caps& caps) {
  if (r_max == 0) throw Error(Errc::ParseError, "r_max must be at least 1");
  const DenseRing D(R);
  const Carrier C(D);
  check_carrier(C, caps, R);

  ProductsCensus census;
  census.sets.push_back(brute_idempotents(R, target, caps));
  std::vector<Quad> idempotents;
  for (std::uint64_t i : census.sets.front()) idempotents.push_back(C.unpack(i));

  for (std::uint32_t r = 1; r < r_max; ++r) {
    const auto& current = census.sets.back();
    const std::uint64_t budget = current.size() * idempotents.size();
    if (budget > caps.pair_products)
      throw Error(Errc::CapExceeded, std::to_string(budget) + " pair products exceed cap " +
                                         std::to_string(caps.pair_products));
    auto next = product_sweep(C, target, current, idempotents);
    // 1 is idempotent, so S_r is contained in S_(r+1).
    if (next.size() == current.size()) {
      census.stable_at = r;
      census.sets.push_back(std::move(next));
      break;
    }
    census.sets.push_back(std::move(next));
  }
  return census;
}

std::vector<std::uint64_t> brute_orbit(const Ring& R, const Mat2& X, const Caps& caps) {
  const DenseRing D(R);
  const Carrier C(D);
  check_carrier(C, caps, R);

  std::vector<std::pair<Quad, Quad>> gens;  // (G, G^-1)
  for (std::uint32_t t = 0; t < D.size(); ++t) {
    const auto ti = static_cast<DenseRing::Index>(t);
    gens.push_back({Quad{D.one(), ti, 0, D.one()}, Quad{D.one(), D.neg(ti), 0, D.one()}});
    gens.push_back({Quad{D.one(), 0, ti, D.one()}, Quad{D.one(), 0, D.neg(ti), D.one()}});
    if (D.is_unit(ti)) gens.push_back({Quad{ti, 0, 0, D.one()}, Quad{D.inv(ti), 0, 0, D.one()}});
  }

  BitSet seen(C.count());
  std::vector<std::uint64_t> frontier{C.pack(C.from_mat(X))};
  seen.set(frontier.front());
  std::vector<std::uint64_t> orbit = frontier;
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t idx : frontier) {
      const Quad A = C.unpack(idx);
      for (const auto& [G, Ginv] : gens) {
        const std::uint64_t img = C.pack(C.mat_mul(C.mat_mul(G, A), Ginv));
        if (seen.set(img)) next.push_back(img);
      }
    }
    orbit.insert(orbit.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::uint64_t brute_orbit_size(const Ring& R, const OrbitLabel& label, const Caps& caps) {
  return brute_orbit(R, mat::label_matrix(R, label), caps).size();
}

std::uint64_t brute_gl2_count(const Ring& R, const Caps& caps) {
  const DenseRing D(R);
  const Carrier C(D);
  check_carrier(C, caps, R);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < C.count(); ++i)
    if (D.is_unit(C.mat_det(C.unpack(i)))) ++count;
  return count;
}

Verdict adjudicate(const BigInt& brute, const std::vector<std::pair<std::string, BigInt>>& candidates) {
  Verdict v;
  for (const auto& [name, value] : candidates)
    if (value == brute) v.matching.push_back(name);
  if (v.matching.empty())
    v.verdict = "CONFLICT";
  else if (v.matching.size() == 1)
    v.verdict = v.matching.front();
  else
    v.verdict = "UNDECIDED";
  return v;
}

CensusReport run_verification(const Ring& R, Target target, std::uint32_t r_max, const Caps& caps) {
  const DenseRing D(R);
  const Carrier C(D);
  check_carrier(C, caps, R);

  CensusReport rep;
  rep.ring = R.describe();
  rep.target = target;
  const std::uint64_t q = R.q();
  const std::uint32_t n = R.n();

  const ProductsCensus products = brute_products_census(R, target, r_max, caps);
  rep.idempotents_brute = products.size(1);
  rep.idempotents_formula_paper = count_idempotents_formula(q, n, R.p(), IdempotentVariant::Paper, target);
  rep.idempotents_formula_alt = count_idempotents_formula(q, n, R.p(), IdempotentVariant::Alt, target);
  rep.closure_stable_at_r = products.stable_at;
  for (const auto& s : products.sets) rep.products_per_r.push_back(s.size());
  const auto& closure = products.sets.back();
  rep.products_brute = closure.size();
  rep.products_closed_form = count_products_formula(q, n, ProductsVariant::Closed, target);
  rep.products_orbitsum_statement = count_products_formula(q, n, ProductsVariant::OrbitsumStatement, target);
  rep.products_orbitsum_proof = count_products_formula(q, n, ProductsVariant::OrbitsumProof, target);
  rep.gl2_brute = brute_gl2_count(R, caps);
  rep.gl2_formula = mat::gl2_size(R);

  std::uint64_t noninvertible = 0;
  for (std::uint64_t i = 0; i < C.count(); ++i)
    if (!is_unit_quad(D, C, target, C.unpack(i))) ++noninvertible;
  rep.noninvertible_total_brute = noninvertible;
  std::uint64_t product_nonunits = 0;
  for (std::uint64_t i : closure)
    if (!is_unit_quad(D, C, target, C.unpack(i))) ++product_nonunits;
  rep.products_noninvertible_brute = product_nonunits;

  BigInt orbit_union = 1;  // the identity
  bool all_statement = true;
  bool all_proof = true;
  for (const OrbitLabel& label : mat::all_labels(R)) {
    OrbitRow row{label, mat::orbit_size(R, label, OrbitVariant::Statement),
                 mat::orbit_size(R, label, OrbitVariant::Proof), std::nullopt, std::nullopt};
    const BigInt brute = brute_orbit_size(R, label, caps);
    row.size_brute = brute;
    row.verdict = adjudicate(brute, {{"STATEMENT", row.size_statement}, {"PROOF", row.size_proof}});
    all_statement = all_statement && row.size_statement == brute;
    all_proof = all_proof && row.size_proof == brute;
    orbit_union += brute;
    rep.orbit_table.push_back(std::move(row));
  }

  rep.verdicts["idempotents"] = adjudicate(
      rep.idempotents_brute, {{"PAPER", rep.idempotents_formula_paper}, {"ALT", rep.idempotents_formula_alt}});
  rep.verdicts["products"] = adjudicate(rep.products_brute, {{"CLOSED", rep.products_closed_form},
                                                             {"ORBITSUM_STATEMENT", rep.products_orbitsum_statement},
                                                             {"ORBITSUM_PROOF", rep.products_orbitsum_proof}});
  rep.verdicts["gl2"] = adjudicate(rep.gl2_brute, {{"FORMULA", rep.gl2_formula}});
  {
    Verdict v;
    if (all_statement) v.matching.push_back("STATEMENT");
    if (all_proof) v.matching.push_back("PROOF");
    v.verdict = v.matching.empty() ? "CONFLICT" : v.matching.size() == 1 ? v.matching.front() : "UNDECIDED";
    rep.verdicts["orbit_sizes"] = v;
  }
  // With 2 invertible H(R) and M_2(R) have the same products; otherwise the
  // orbit union only describes M_2(R).
  if (target == Target::M2 || R.p() != 2)
    rep.verdicts["orbit_partition"] = adjudicate(rep.products_brute, {{"ORBIT_UNION", orbit_union}});
  return rep;
}

nlohmann::ordered_json to_json(const Ring& R, const CensusReport& rep) {
  using nlohmann::ordered_json;
  auto verdict_json = [](const Verdict& v) {
    return ordered_json{{"verdict", v.verdict}, {"matching", v.matching}};
  };
  ordered_json counts;
  counts["idempotents_brute"] = rep.idempotents_brute.str();
  counts["idempotents_formula_paper"] = rep.idempotents_formula_paper.str();
  counts["idempotents_formula_alt"] = rep.idempotents_formula_alt.str();
  counts["products_brute"] = rep.products_brute.str();
  counts["products_closed_form"] = rep.products_closed_form.str();
  counts["products_orbitsum_statement"] = rep.products_orbitsum_statement.str();
  counts["products_orbitsum_proof"] = rep.products_orbitsum_proof.str();
  counts["gl2_brute"] = rep.gl2_brute.str();
  counts["gl2_formula"] = rep.gl2_formula.str();
  counts["closure_stable_at_r"] =
      rep.closure_stable_at_r ? ordered_json(std::to_string(*rep.closure_stable_at_r)) : ordered_json(nullptr);
  ordered_json per_r = ordered_json::array();
  for (const auto& s : rep.products_per_r) per_r.push_back(s.str());
  counts["products_per_r"] = per_r;
  counts["products_noninvertible_brute"] = rep.products_noninvertible_brute.str();
  counts["noninvertible_total_brute"] = rep.noninvertible_total_brute.str();

  ordered_json table = ordered_json::array();
  for (const OrbitRow& row : rep.orbit_table) {
    ordered_json j;
    j["a"] = R.format(row.label.a);
    j["bclass"] = mat::label_bclass(row.label);
    j["size_statement"] = row.size_statement.str();
    j["size_proof"] = row.size_proof.str();
    j["size_brute"] = row.size_brute ? ordered_json(row.size_brute->str()) : ordered_json(nullptr);
    j["verdict"] = row.verdict ? ordered_json(row.verdict->verdict) : ordered_json(nullptr);
    table.push_back(std::move(j));
  }

  ordered_json verdicts;
  for (const auto& [key, v] : rep.verdicts) verdicts[key] = verdict_json(v);

  ordered_json out;
  out["ring"] = rep.ring;
  out["target"] = std::string(target_name(rep.target));
  out["counts"] = std::move(counts);
  out["orbit_table"] = std::move(table);
  out["verdicts"] = std::move(verdicts);
  return out;
}

}  // namespace census
}  // namespace idemquat

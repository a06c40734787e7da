#include "idemquat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "idemquat/census.hpp"
#include "idemquat/chainring.hpp"
#include "idemquat/dense_ring.hpp"
#include "idemquat/factorize.hpp"
#include "idemquat/mat2.hpp"
#include "idemquat/quaternion.hpp"

namespace idemquat::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string ring;
  std::string format;
  std::string element;
  std::string kind = "auto";
  std::string target = "h";
  std::string out_path;
  std::uint32_t r_max = 8;
  std::optional<std::uint32_t> r_bound;
  std::optional<std::uint64_t> cap;
  std::uint64_t q = 0;
  std::uint32_t n = 0;
  std::uint32_t p = 0;
};

Caps make_caps(const Options& o) {
  Caps caps = Caps::from_env();
  if (o.cap) caps.carrier = *o.cap;
  return caps;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path);
  if (!file) throw Error(Errc::ParseError, "cannot open '" + o.out_path + "' for writing");
  file << text;
  out << "wrote " << o.out_path << "\n";
}

void cmd_ring_info(const Options& o, std::ostream& out) {
  const Ring R = Ring::parse(o.ring);
  ordered_json j;
  j["ring"] = R.describe();
  j["p"] = R.p();
  j["r"] = R.r();
  j["n"] = R.n();
  j["q"] = std::to_string(R.q());
  j["size"] = std::to_string(R.size());
  j["uniformizer"] = R.format(R.uniformizer());
  j["units"] = std::to_string(R.units_count());
  j["is_field"] = R.n() == 1;
  j["two_invertible"] = R.is_unit(R.from_int(2));
  ordered_json ideals = ordered_json::array();
  for (std::uint32_t k = 0; k <= R.n(); ++k) ideals.push_back(std::to_string(R.ideal_size(k)));
  j["ideal_sizes"] = ideals;

  if (o.format == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  out << "ring: " << R.describe() << "\n"
      << "p: " << R.p() << "\nr: " << R.r() << "\nn: " << R.n() << "\nq: " << R.q() << "\n"
      << "size: " << R.size() << "\n"
      << "uniformizer: " << R.format(R.uniformizer()) << "\n"
      << "units: " << R.units_count() << "\n"
      << "field: " << (R.n() == 1 ? "yes" : "no") << "\n"
      << "two_invertible: " << (R.is_unit(R.from_int(2)) ? "yes" : "no") << "\n";
  for (std::uint32_t k = 0; k <= R.n(); ++k) out << "|J^" << k << "|: " << R.ideal_size(k) << "\n";
}

void cmd_factor(const Options& o, std::ostream& out) {
  const Ring R = Ring::parse(o.ring);
  std::string kind = o.kind;
  if (kind == "auto") {
    const bool has_unit_letter = o.element.find_first_of("ijk") != std::string::npos;
    kind = "quaternion";
    if (!has_unit_letter) {
      try {
        mat::parse(R, o.element);
        kind = "matrix";
      } catch (const Error&) {
      }
    }
  }

  ordered_json j;
  j["ring"] = R.describe();
  j["kind"] = kind;
  auto conjugators = [&](const std::vector<Mat2>& list) {
    ordered_json arr = ordered_json::array();
    for (const Mat2& P : list) arr.push_back(mat::format(R, P));
    return arr;
  };

  if (kind == "matrix") {
    const Mat2 A = mat::parse(R, o.element);
    j["element"] = mat::format(R, A);
    const auto w = factor::is_product_of_two_idempotents_mat(R, A);
    j["decision"] = w ? "factorizable" : "not factorizable";
    j["e1"] = w ? ordered_json(mat::format(R, w->e1)) : ordered_json(nullptr);
    j["e2"] = w ? ordered_json(mat::format(R, w->e2)) : ordered_json(nullptr);
    j["conjugators"] = w ? conjugators(w->conjugators) : ordered_json::array();
    if (w) factor::verify(R, *w, A);
    j["verified"] = w ? ordered_json(true) : ordered_json(nullptr);
  } else if (kind == "quaternion") {
    const Quaternion x = quat::parse(R, o.element);
    j["element"] = quat::format(R, x);
    std::optional<QuatMatIso> iso;
    if (R.is_unit(R.from_int(2))) iso.emplace(R);
    const auto w = factor::is_product_of_idempotents(R, iso ? &*iso : nullptr, x, o.r_bound);
    j["decision"] = w ? "factorizable" : "not factorizable";
    j["e1"] = w ? ordered_json(quat::format(R, w->e1)) : ordered_json(nullptr);
    j["e2"] = w ? ordered_json(quat::format(R, w->e2)) : ordered_json(nullptr);
    j["conjugators"] = w ? conjugators(w->conjugators) : ordered_json::array();
    if (w) factor::verify(R, *w, x);
    j["verified"] = w ? ordered_json(true) : ordered_json(nullptr);
    j["r_bound"] = o.r_bound ? ordered_json(*o.r_bound) : ordered_json(nullptr);
  } else {
    throw Error(Errc::ParseError, "--kind must be auto, quaternion or matrix");
  }
  out << j.dump(2) << "\n";
}

void cmd_verify(const Options& o, std::ostream& out) {
  const Ring R = Ring::parse(o.ring);
  const auto report = census::run_verification(R, parse_target(o.target), o.r_max, make_caps(o));
  emit(o, census::to_json(R, report).dump(2) + "\n", out);
}

void cmd_census(const Options& o, std::ostream& out) {
  const Ring R = Ring::parse(o.ring);
  const Target target = parse_target(o.target);
  const auto pc = census::brute_products_census(R, target, o.r_max, make_caps(o));
  std::string text;
  if (o.format == "csv") {
    text = "r,size\n";
    for (std::size_t r = 0; r < pc.sets.size(); ++r)
      text += std::to_string(r + 1) + "," + std::to_string(pc.sets[r].size()) + "\n";
  } else {
    ordered_json j;
    j["ring"] = R.describe();
    j["target"] = std::string(target_name(target));
    j["idempotents"] = std::to_string(pc.size(1));
    ordered_json sizes = ordered_json::array();
    for (const auto& s : pc.sets) sizes.push_back(std::to_string(s.size()));
    j["products_per_r"] = sizes;
    j["closure_stable_at_r"] = pc.stable_at ? ordered_json(std::to_string(*pc.stable_at)) : ordered_json(nullptr);
    text = j.dump(2) + "\n";
  }
  emit(o, text, out);
}

void cmd_orbits(const Options& o, std::ostream& out) {
  const Ring R = Ring::parse(o.ring);
  const Caps caps = make_caps(o);
  bool affordable = R.size() <= DenseRing::kMaxSize;
  if (affordable) {
    const std::uint64_t s = R.size();
    affordable = s * s * s * s <= caps.carrier;
  }

  ordered_json rows = ordered_json::array();
  for (const OrbitLabel& label : mat::all_labels(R)) {
    ordered_json row;
    row["a"] = R.format(label.a);
    row["bclass"] = mat::label_bclass(label);
    row["valuation"] = R.valuation(label.a);
    row["size_statement"] = mat::orbit_size(R, label, OrbitVariant::Statement).str();
    row["size_proof"] = mat::orbit_size(R, label, OrbitVariant::Proof).str();
    row["size_brute"] = affordable ? ordered_json(std::to_string(census::brute_orbit_size(R, label, caps)))
                                   : ordered_json(nullptr);
    rows.push_back(std::move(row));
  }

  std::string text;
  if (o.format == "json") {
    ordered_json j;
    j["ring"] = R.describe();
    j["orbits"] = rows;
    text = j.dump(2) + "\n";
  } else {
    const char sep = o.format == "csv" ? ',' : '\t';
    text = std::string("a") + sep + "bclass" + sep + "valuation" + sep + "size_statement" + sep + "size_proof" +
           sep + "size_brute\n";
    for (const auto& row : rows) {
      std::string a = row["a"].get<std::string>();
      if (sep == ',' && a.find(',') != std::string::npos) a = "\"" + a + "\"";
      text += a + sep + row["bclass"].get<std::string>() + sep + std::to_string(row["valuation"].get<int>()) + sep +
              row["size_statement"].get<std::string>() + sep + row["size_proof"].get<std::string>() + sep +
              (row["size_brute"].is_null() ? std::string("-") : row["size_brute"].get<std::string>()) + "\n";
    }
  }
  emit(o, text, out);
}

void cmd_formulas(const Options& o, std::ostream& out) {
  if (!is_prime(o.p)) throw Error(Errc::NotPrime, std::to_string(o.p) + " is not prime");
  std::uint64_t rest = o.q;
  while (rest > 1 && rest % o.p == 0) rest /= o.p;
  if (o.q < 2 || rest != 1)
    throw Error(Errc::InvalidSpec, "q = " + std::to_string(o.q) + " is not a power of p = " + std::to_string(o.p));
  if (o.n == 0) throw Error(Errc::InvalidSpec, "n must be positive");

  ordered_json j;
  j["q"] = std::to_string(o.q);
  j["n"] = std::to_string(o.n);
  j["p"] = std::to_string(o.p);
  j["gl2"] = mat::gl2_size(o.q, o.n).str();
  for (auto v : {IdempotentVariant::Paper, IdempotentVariant::Alt})
    j["idempotents_" + std::string(variant_name(v))] = census::count_idempotents_formula(o.q, o.n, o.p, v).str();
  for (auto v : {ProductsVariant::Closed, ProductsVariant::OrbitsumStatement, ProductsVariant::OrbitsumProof})
    j["products_" + std::string(variant_name(v))] = census::count_products_formula(o.q, o.n, v).str();
  if (o.q == 3) j["example_alpha"] = census::example_formula_alpha(o.n).str();

  if (o.format == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) out << key << ": " << value.get<std::string>() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Products of idempotents in quaternion rings over finite chain rings"};
  app.name("idemquat");
  app.require_subcommand(1);
  Options o;

  auto ring_opt = [&](CLI::App* sub) {
    sub->add_option("--ring", o.ring, "ring spec, e.g. zpn:p=3,n=2")->required();
  };
  auto cap_opt = [&](CLI::App* sub) { sub->add_option("--cap", o.cap, "carrier cap (elements)"); };

  auto* ring_info = app.add_subcommand("ring-info", "summarize a ring");
  ring_opt(ring_info);
  ring_info->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* factor_cmd = app.add_subcommand("factor", "decide and witness a product of two idempotents");
  ring_opt(factor_cmd);
  factor_cmd->add_option("--element", o.element, "quaternion or matrix literal")->required();
  factor_cmd->add_option("--kind", o.kind, "auto|quaternion|matrix")
      ->check(CLI::IsMember({"auto", "quaternion", "matrix"}));
  factor_cmd->add_option("--rbound", o.r_bound, "number of idempotent factors (recorded only)");

  auto* verify_cmd = app.add_subcommand("verify", "full brute-force verification report");
  ring_opt(verify_cmd);
  verify_cmd->add_option("--target", o.target, "h|m2")->check(CLI::IsMember({"h", "m2"}));
  verify_cmd->add_option("--rmax", o.r_max, "largest product length to sweep")->check(CLI::PositiveNumber);
  cap_opt(verify_cmd);
  verify_cmd->add_option("--out", o.out_path, "report path (stdout if omitted)");

  auto* census_cmd = app.add_subcommand("census", "sizes of the r-fold idempotent product sets");
  ring_opt(census_cmd);
  census_cmd->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  census_cmd->add_option("--target", o.target, "h|m2")->check(CLI::IsMember({"h", "m2"}));
  census_cmd->add_option("--rmax", o.r_max, "largest product length to sweep")->check(CLI::PositiveNumber);
  cap_opt(census_cmd);
  census_cmd->add_option("--out", o.out_path, "output path (stdout if omitted)");

  auto* orbits_cmd = app.add_subcommand("orbits", "orbit labels of M(a,b) with formula and brute sizes");
  ring_opt(orbits_cmd);
  orbits_cmd->add_option("--format", o.format, "text|csv|json")->check(CLI::IsMember({"text", "csv", "json"}));
  cap_opt(orbits_cmd);
  orbits_cmd->add_option("--out", o.out_path, "output path (stdout if omitted)");

  auto* formulas_cmd = app.add_subcommand("formulas", "evaluate every counting formula without enumeration");
  formulas_cmd->add_option("--q", o.q, "residue field size")->required();
  formulas_cmd->add_option("--n", o.n, "chain length")->required();
  formulas_cmd->add_option("--p", o.p, "characteristic of the residue field")->required();
  formulas_cmd->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*ring_info) cmd_ring_info(o, out);
    else if (*factor_cmd) cmd_factor(o, out);
    else if (*verify_cmd) cmd_verify(o, out);
    else if (*census_cmd) cmd_census(o, out);
    else if (*orbits_cmd) cmd_orbits(o, out);
    else if (*formulas_cmd) cmd_formulas(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::CapExceeded: return kCapExceeded;
      case Errc::VerificationFailed: return kVerificationFailed;
      default: return kUsage;
    }
  }
  return kOk;
}

}  // namespace idemquat::cli

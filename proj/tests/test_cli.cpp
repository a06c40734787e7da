#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "idemquat/cli.hpp"
#include "json.hpp"

using idemquat::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("cli ring-info") {
  const auto r = call({"ring-info", "--ring", "zpn:p=3,n=2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("size: 9") != std::string::npos);
  CHECK(r.out.find("units: 6") != std::string::npos);

  const auto bad = call({"ring-info", "--ring", "zpn:p=4,n=1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("NotPrime") != std::string::npos);

  const auto gf9 = json_of(call({"ring-info", "--ring", "tp:p=3,r=2,n=1,f=t^2+1", "--format", "json"}));
  CHECK(gf9["is_field"] == true);
  CHECK(gf9["q"] == "9");
  CHECK(call({"ring-info", "--ring", "tp:p=3,r=2,n=1,f=t^2+2"}).code == 2);
}

TEST_CASE("cli factor") {
  const auto one = json_of(call({"factor", "--ring", "zpn:p=3,n=2", "--element", "1"}));
  CHECK(one["decision"] == "factorizable");
  CHECK(one["verified"] == true);

  const auto zero = json_of(call({"factor", "--ring", "zpn:p=2,n=2", "--element", "0+0i+0j+0k"}));
  CHECK(zero["kind"] == "quaternion");
  CHECK(zero["decision"] == "factorizable");

  const auto no = call({"factor", "--ring", "zpn:p=2,n=2", "--element", "1+1i+0j+0k"});
  CHECK(no.code == 0);
  CHECK(json_of(no)["decision"] == "not factorizable");
  CHECK(json_of(no)["verified"].is_null());

  const auto m = json_of(call({"factor", "--ring", "zpn:p=3,n=2", "--element", "[[0,0],[1,0]]"}));
  CHECK(m["kind"] == "matrix");
  CHECK(m["decision"] == "factorizable");
  CHECK(m["e1"].is_string());

  const auto rb = json_of(call({"factor", "--ring", "zpn:p=3,n=2", "--element", "1+1i", "--rbound", "4"}));
  CHECK(rb["r_bound"] == 4);

  CHECK(call({"factor", "--ring", "zpn:p=3,n=2", "--element", "1+2i+3i"}).code == 2);
}

TEST_CASE("cli usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"ring-info", "--ring", "zpn:p=3,n=2", "--nope"}).code == 2);
  CHECK(call({"ring-info"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("cli verify") {
  const auto r = call({"verify", "--ring", "zpn:p=3,n=2"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["counts"]["products_brute"] == "898");
  CHECK(j["verdicts"]["idempotents"]["verdict"] == "ALT");
  CHECK(call({"verify", "--ring", "zpn:p=3,n=2"}).out == r.out);

  const auto z4 = json_of(call({"verify", "--ring", "zpn:p=2,n=2"}));
  CHECK(z4["counts"]["products_brute"] == "2");

  const auto capped = call({"verify", "--ring", "zpn:p=3,n=1", "--cap", "10"});
  CHECK(capped.code == 3);
  CHECK(capped.err.find("CapExceeded") != std::string::npos);
}

TEST_CASE("cli formulas, census, orbits") {
  const auto f = call({"formulas", "--q", "3", "--n", "2", "--p", "3"});
  CHECK(f.code == 0);
  CHECK(f.out.find("products_CLOSED: 898") != std::string::npos);
  CHECK(f.out.find("idempotents_ALT: 110") != std::string::npos);

  const auto c = call({"census", "--ring", "zpn:p=3,n=1", "--target", "m2", "--format", "csv"});
  CHECK(c.code == 0);
  CHECK(c.out == "r,size\n1,14\n2,34\n3,34\n");

  const auto o = json_of(call({"orbits", "--ring", "zpn:p=3,n=1", "--format", "json"}));
  CHECK(o["ring"] == "zpn:p=3,n=1");
  REQUIRE(o["orbits"].is_array());
  CHECK(o["orbits"].size() == 4);
  CHECK(o["orbits"][1]["size_brute"] == "8");

  const auto path = std::filesystem::temp_directory_path() / "idemquat_cli_test.json";
  std::filesystem::remove(path);
  const auto w = call({"verify", "--ring", "zpn:p=3,n=1", "--out", path.string()});
  CHECK(w.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  const auto j = nlohmann::json::parse(in);
  CHECK(j["counts"]["products_brute"] == "34");
  std::filesystem::remove(path);
}

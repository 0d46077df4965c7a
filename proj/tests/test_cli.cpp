#include <sstream>

#include "catch_amalgamated.hpp"
#include "kosphere/cli.hpp"
#include "kosphere/json_io.hpp"

using namespace kosphere;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string &input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("phi and tables", "[cli]") {
  CHECK(run({"phi", "2", "6"}).out == "2\n");
  CHECK(run({"phi", "1", "3"}).out == "∞\n");
  Result t = run({"phi-table", "--check"});
  CHECK(t.code == 0);
  CHECK(t.out.find("| 1 | 1 | 1 | 1 | ∞ | 1 | 1 | 1 | ∞ |") != std::string::npos);
  CHECK(run({"--format", "csv", "phi-table"}).out.find("inf") != std::string::npos);
  CHECK(json::parse(run({"--format", "json", "order-table"}).out).contains("rows"));
  CHECK(run({"order-table", "--check"}).code == 0);
}

TEST_CASE("coeff and ideal", "[cli]") {
  CHECK(run({"coeff", "b^2", "--map", "realify"}).out == "a*l^0\n");
  CHECK(run({"coeff", "e*e*e"}).out == "0\n");
  Result bad = run({"coeff", "e*b"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"ideal", "(2,e2,a)", "-8"}).out.find("IndexK(2)") != std::string::npos);
  CHECK(run({"ideal", "(2,e2,a)", "-1"}).out.find("Zero") != std::string::npos);
}

TEST_CASE("classify exit codes", "[cli]") {
  Result a = run({"classify", "1", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == "OnlyNullHomotopic (both-odd)\n");
  CHECK(run({"classify", "2", "4"}).out == "AllDegrees (nice-derivation)\n");
  CHECK(run({"classify", "4", "4"}).code == 3);
  CHECK(run({"classify", "0", "4"}).code == 2);
  CHECK(run({"classify", "x", "4"}).code == 2);
  json j = json::parse(run({"--format", "json", "classify", "2", "2"}).out);
  CHECK(j["verdict"] == "EvenDegreesOnly");
}

TEST_CASE("certify, realize, verify-map pipeline", "[cli]") {
  Result c = run({"certify", "5", "2"});
  REQUIRE(c.code == 0);
  CHECK(json::parse(c.out)["target"] == json::array({5, 2}));
  Result r = run({"realize", "-"}, c.out);
  REQUIRE(r.code == 0);
  json spec = json::parse(r.out);
  CHECK(spec["a"] == 6);
  CHECK(spec["scale"] == "1/2");
  Result v = run({"verify-map", "-"}, r.out);
  CHECK(v.code == 0);
  CHECK(v.out.find("samples: 100/100") != std::string::npos);

  CHECK(run({"certify", "1", "1"}).code == 3);
}

TEST_CASE("verify-map rejects a tampered map", "[cli]") {
  json spec = json::parse(run({"realize", "-"}, run({"certify", "2", "1"}).out).out);
  spec["mats"][1][0][0] = spec["mats"][1][0][0].get<int>() + 1;
  Result v = run({"verify-map", "-"}, spec.dump());
  CHECK(v.code == 1);
  CHECK(v.out.find("normed: FAIL") != std::string::npos);
  CHECK(run({"verify-map", "-"}, "{not json").code == 2);
}

TEST_CASE("kgroups, audit, usage", "[cli]") {
  json k = json::parse(run({"--format", "json", "kgroups", "2", "6", "R"}).out);
  CHECK(k["wedge"]["index"] == 2);
  CHECK(run({"kgroups", "2", "6", "Q"}).code == 2);
  Result a = run({"audit", "8"});
  CHECK(a.code == 0);
  CHECK(a.out.find("0 violations") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic", "[cli]") {
  CHECK(run({"classify-range", "6"}).out == run({"classify-range", "6"}).out);
  std::string r1 = run({"realize", "-"}, run({"certify", "6", "1"}).out).out;
  CHECK(r1 == run({"realize", "-"}, run({"certify", "6", "1"}).out).out);
  CHECK(run({"--seed", "5", "verify-map", "-"}, r1).out == run({"--seed", "5", "verify-map", "-"}, r1).out);
}

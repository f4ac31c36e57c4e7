#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <vector>

#include "borsuk/cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "borsuk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = borsuk::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("capacity subcommand") {
  const auto r = invoke({"capacity", "S^2 v S^4"});
  CHECK(r.status == 0);
  CHECK(r.out.find("Finite(4)") != std::string::npos);

  const auto cp3 = invoke({"capacity", "CP^3"});
  CHECK(cp3.status == 0);
  CHECK(cp3.out.find("Unknown") != std::string::npos);

  const auto e = invoke({"capacity", "--enumerate", "S^1 v S^2"});
  CHECK(e.status == 0);
  CHECK(e.out.find("dominated homotopy types (4):\n  *\n  S^1\n  S^2\n  S^1 v S^2\n") !=
        std::string::npos);

  const auto ext = invoke({"capacity", "M(Z/2, 2) v S^3"});
  CHECK(ext.out.find("note:") != std::string::npos);
}

TEST_CASE("compare subcommand") {
  const auto r = invoke({"compare", "S^2 v S^4", "CP^2", "--bound", "5"});
  CHECK(r.status == 0);
  CHECK(r.out.find("is_counterexample: true") != std::string::npos);

  const auto d = invoke({"compare", "K(Z/2, 1)", "K(Z/2, 1)"});
  CHECK(d.out.find("verified up to 10") != std::string::npos);
}

TEST_CASE("homology and summands subcommands") {
  const auto h = invoke({"homology", "CP^2", "--bound", "5"});
  CHECK(h.status == 0);
  CHECK(h.out.find("4       Z\n5       0\n") != std::string::npos);

  const auto s = invoke({"summands", "Z/4 + Z/2"});
  CHECK(s.status == 0);
  CHECK(s.out.find("direct summand classes: 4") != std::string::npos);
}

TEST_CASE("JSON output") {
  const auto r = invoke({"--json", "compare", "S^2 v S^4", "CP^2", "--bound", "10"});
  REQUIRE(r.status == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["is_counterexample"] == true);
  CHECK(doc["capacity_x"]["kind"] == "Finite");
  CHECK(doc["capacity_x"]["value"] == 4);
  CHECK(doc["capacity_y"]["value"] == 2);
  CHECK(doc["exact_comparison"] == true);
  CHECK(doc.begin().key() == "command");

  // byte-stable across runs, flag position free
  CHECK(invoke({"compare", "--json", "S^2 v S^4", "CP^2", "--bound", "10"}).out == r.out);
  CHECK(invoke({"--json", "compare", "S^2 v S^4", "CP^2", "--bound", "10"}).out == r.out);

  const auto cap = nlohmann::json::parse(invoke({"--json", "capacity", "--enumerate", "CP^2"}).out);
  CHECK(cap["dominated"] == nlohmann::json::array({"*", "CP^2"}));
  CHECK(cap["case"] == "complex_projective");

  const auto h = nlohmann::json::parse(invoke({"--json", "homology", "K(Z/3, 1)", "--bound", "3"}).out);
  CHECK(h["exact_above_bound"] == false);
  CHECK(h["groups"][3]["invariant_factors"] == nlohmann::json::array({3}));

  const auto s = nlohmann::json::parse(invoke({"--json", "summands", "Z^2 + Z/6"}).out);
  CHECK(s["count"] == 12);
  CHECK(s["summands"].size() == 12);
}

TEST_CASE("error paths") {
  const auto parse = invoke({"capacity", "S^2 v"});
  CHECK(parse.status == 1);
  CHECK(parse.err.rfind("error: parse_error: ", 0) == 0);
  CHECK(parse.err.find('\n') == parse.err.size() - 1);

  const auto domain = invoke({"capacity", "M(Z, 1)"});
  CHECK(domain.status == 1);
  CHECK(domain.err.rfind("error: domain_error: ", 0) == 0);

  const auto unsupported = invoke({"homology", "K(Z/4, 3)"});
  CHECK(unsupported.status == 2);
  CHECK(unsupported.err.rfind("error: unsupported_space: ", 0) == 0);

  const auto no_enum = invoke({"capacity", "--enumerate", "CP^3"});
  CHECK(no_enum.status == 2);
  CHECK(no_enum.err.rfind("error: unsupported_capacity: ", 0) == 0);

  const auto usage = invoke({"frobnicate"});
  CHECK(usage.status == 1);
  CHECK(usage.err.rfind("error: usage_error: ", 0) == 0);

  CHECK(invoke({}).status == 1);
  CHECK(invoke({"homology", "S^2", "--bound", "-1"}).status == 1);
}

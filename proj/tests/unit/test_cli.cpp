#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "softtop/cli/commands.hpp"
#include "softtop/cli/documents.hpp"
#include "softtop/error.hpp"
#include "softtop/oracle.hpp"

using namespace softtop;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = SOFTTOP_FIXTURES;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (kFixtures / name).string(); }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check-topology") {
  auto r = run({"check-topology", fixture("indiscrete.json")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "open sets=2"));

  r = run({"check-topology", fixture("not_topology.json")});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "not_closed_under_union for (F, H)"));
  CHECK(contains(r.out, "Def: soft topology"));

  r = run({"check-topology", fixture("generated.json"), "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["open_sets"] == 5);
  CHECK(j["notices"].size() == 2);
  CHECK(j["status"] == "pass");

  r = run({"check-topology", fixture("malformed.json")});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "ParseError"));
  CHECK(run({"check-topology", fixture("missing.json")}).code == 2);
}

TEST_CASE("closure command") {
  auto r = run({"closure", fixture("f1.json"), "--set", "H"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "closure(H) = {e1:{b},e2:{b}}"));
  CHECK(run({"closure", fixture("f1.json"), "--set", "Q"}).code == 2);
}

TEST_CASE("continuity command") {
  auto r = run({"continuity", fixture("coarse_to_fine.json")});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "pointwise: not continuous"));
  CHECK(contains(r.out, "open_preimage: not continuous"));
  CHECK(contains(r.out, "closed_preimage: not continuous"));

  r = run({"continuity", fixture("coarse_to_fine.json"), "--src", fixture("f1.json"), "--dst",
           fixture("indiscrete.json"), "--method", "open", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["methods"].size() == 1);
  CHECK(j["methods"][0]["continuous"] == true);

  CHECK(run({"continuity", fixture("coarse_to_fine.json"), "--method", "sideways"}).code == 2);
}

TEST_CASE("product command writes a parseable document") {
  const auto out = fs::temp_directory_path() / "softtop_product_test.json";
  auto r = run({"product", fixture("sierpinski.json"), fixture("sierpinski.json"), "--emit",
                out.string(), "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["initial_topology_agrees"] == true);
  CHECK(j["projections_continuous"] == true);
  const auto doc = cli::parse_space(out);
  CHECK(doc.space.context()->element(1) == "(a,b)");
  CHECK(doc.space.context()->param(0) == "(e,e)");
  CHECK(doc.space.opens().size() == j["open_sets"].get<std::size_t>());
  CHECK(run({"check-topology", out.string()}).code == 0);
  fs::remove(out);
}

TEST_CASE("embed-lemma command") {
  auto r = run({"embed-lemma", fixture("lemma_discrete_identity.json"), "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["certificate"]["overall"] == true);
  CHECK(j["hypotheses"]["hold"] == true);

  r = run({"embed-lemma", fixture("lemma_constant.json"), "--json"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["hypotheses"]["separates_points"] == false);
  CHECK(j["certificate"]["injective"] == false);

  r = run({"embed-lemma", fixture("lemma_two_identities.json")});
  CHECK(r.code == 0);
  r = run({"embed-lemma", fixture("lemma_universe_only.json")});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "Prop: soft embedding lemma"));
}

TEST_CASE("fuzz command") {
  auto r = run({"fuzz", "--seed", "42", "--iters", "20"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "status: pass"));
  const auto a = run({"fuzz", "--seed", "7", "--iters", "10", "--json"});
  const auto b = run({"fuzz", "--seed", "7", "--iters", "10", "--json"});
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["properties"].size() == 8);
  for (const auto& p : j["properties"]) CHECK(p["failures"] == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"fuzz", "--iters", "x"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("space documents") {
  auto doc = cli::parse_space_text(R"({"universe":["a","b"],"params":["e1","e2"],
    "soft_sets":{"F":{"e2":["b"]}},"topology":"generate","subbase":["F"]})");
  CHECK(doc.set("F").row_empty(0));
  CHECK(doc.set("F").contains(1, 1));
  CHECK(doc.space.opens().size() == 3);

  auto code_of = [](const std::string& text) {
    try {
      cli::parse_space_text(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidContext;
  };
  CHECK(code_of(R"({"universe":["a"],"params":["e"],"soft_sets":{"F":{},"F":{}},"topology":"discrete"})") ==
        ErrorCode::kParseError);
  CHECK(code_of(R"({"universe":["a"],"params":["e"],"soft_sets":{"null":{}},"topology":"discrete"})") ==
        ErrorCode::kParseError);
  CHECK(code_of(R"({"universe":["a"],"params":["e"],"soft_sets":{"F":{"e":["z"]}},"topology":"discrete"})") ==
        ErrorCode::kUnknownLabel);
  CHECK(code_of(R"({"universe":["a"],"params":["e"],"topology":"sparse"})") == ErrorCode::kParseError);
  CHECK(code_of(R"({"universe":["a"],"params":["e"],"topology":["null","G"]})") ==
        ErrorCode::kParseError);
  CHECK(code_of(R"({"universe":["a","a"],"params":["e"],"topology":"discrete"})") ==
        ErrorCode::kParseError);
  CHECK(code_of(R"({"params":["e"],"topology":"discrete"})") == ErrorCode::kParseError);
}

TEST_CASE("mapping documents") {
  auto src = Context::make({"a", "b"}, {"e"});
  auto dst = Context::make({"x"}, {"d"});
  const auto m = cli::parse_mapping_text(R"({"phi":{"a":"x","b":"x"},"psi":{"e":"d"}})", src, dst);
  CHECK(m.phi(1) == 0);
  CHECK_THROWS_AS(cli::parse_mapping_text(R"({"phi":{"a":"x"},"psi":{"e":"d"}})", src, dst), Error);
  CHECK_THROWS_AS(cli::parse_mapping_text(R"({"phi":{"a":"x","b":"y"},"psi":{"e":"d"}})", src, dst),
                  Error);
}

TEST_CASE("emitted spaces parse back to the same keys") {
  oracle::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto s = oracle::random_space(rng, {});
    const auto back = cli::parse_space_text(cli::emit_space(s));
    REQUIRE(back.space.opens().size() == s.opens().size());
    for (std::size_t k = 0; k < s.opens().size(); ++k) {
      CHECK(back.space.opens()[k].key() == s.opens()[k].key());
    }
    CHECK(std::ranges::equal(back.space.context()->universe(), s.context()->universe()));
  }
}

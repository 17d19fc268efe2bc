#include "doctest.h"

#include "cubicsym/constructions.hpp"
#include "cubicsym/io.hpp"
#include "cubicsym/report.hpp"
#include "cubicsym/verify.hpp"

using namespace cubicsym;

namespace {
std::vector<std::string> hit_names(const ClaimReport& r) {
  std::vector<std::string> out;
  for (const auto& h : r.hits) out.push_back(h.name);
  return out;
}
}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("claim registry") {
    CHECK(claim_ids().size() == 9);
    CHECK(default_max_n("thm41-g4") == 14);
    CHECK_THROWS_AS(verify_claim("nosuch"), UnknownClaim);
  }

  TEST_CASE("recognize") {
    CHECK(recognize(catalog("gp(5,2)")) == std::optional<std::string>("petersen"));
    CHECK_FALSE(recognize(catalog("prism:5")).has_value());
  }

  TEST_CASE("thm41-g4") {
    auto r = verify_claim("thm41-g4", {14, 2, {}});
    CHECK(r.pass);
    CHECK(hit_names(r) == std::vector<std::string>{"k33", "cube"});
  }

  TEST_CASE("thm41-g5 at small range") {
    auto r = verify_claim("thm41-g5", {12, 1, {}});
    CHECK(r.pass);
    CHECK(hit_names(r) == std::vector<std::string>{"petersen"});
    CHECK(r.notes.back().find("dodecahedron") != std::string::npos);
  }

  TEST_CASE("lem46 and cor49") {
    auto l = verify_claim("lem46", {18, 2, {}});
    CHECK(l.pass);
    CHECK(hit_names(l) == std::vector<std::string>{"heawood", "pappus"});
    auto c = verify_claim("cor49", {18, 2, {}});
    CHECK(c.pass);
    for (const auto& h : c.hits)
      if (h.details["max_s"] == 3) CHECK(h.details["rho"] == 3);
  }

  TEST_CASE("thm34 on supplied input") {
    auto r = verify_claim("thm34", {10, 1, {"truncated-icosahedron"}});
    CHECK(r.pass);
    REQUIRE_FALSE(r.hits.empty());
    CHECK(r.hits.front().details["rho"] == 2);
  }

  TEST_CASE("a failing report carries the counterexample") {
    // petersen as a cor33 input is excluded by the hypothesis, not a failure
    auto r = verify_claim("cor33", {10, 1, {"petersen"}});
    CHECK(r.pass);
    CHECK(r.hits.empty());
  }

  TEST_CASE("report json is stable across job counts") {
    auto a = to_json(verify_claim("thm44-g6", {16, 1, {}})).dump();
    auto b = to_json(verify_claim("thm44-g6", {16, 4, {}})).dump();
    CHECK(a == b);
    auto j = to_json(verify_claim("thm44-g6", {16, 1, {}}));
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["verdict"] == "pass");
  }

  TEST_CASE("analysis report mirrors library values") {
    auto r = analyze(catalog("heawood"));
    CHECK(r.aut_order == 336);
    REQUIRE(r.transitivity);
    CHECK(r.transitivity->max_s == 4);
    CHECK(std::get<Cost>(*r.cost).rho == 5);
    CHECK(r.digest == fnv1a_hex(r.canonical_form));
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    auto k4 = analyze(from_graph6("C~"));
    CHECK(k4.distinguishing_number == 4);
    auto lam = to_json(analyze(catalog("fig5_lambda")));
    CHECK(lam["aut_order"] == 24);
    CHECK(lam["vertex_transitive"] == false);
    auto budgeted = analyze(catalog("heawood"), {10});
    CHECK_FALSE(budgeted.cost.has_value());
    CHECK(to_json(budgeted)["distinguishing_cost"]["status"] == "budget-exhausted");
  }
}

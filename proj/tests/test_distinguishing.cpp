#include "doctest.h"

#include <random>

#include "cubicsym/constructions.hpp"
#include "cubicsym/distinguishing.hpp"
#include "cubicsym/enumeration.hpp"
#include "cubicsym/search.hpp"
#include "cubicsym/symmetry.hpp"
#include "oracles.hpp"

using namespace cubicsym;

namespace {
int cost_value(const CostResult& r) {
  if (auto* c = std::get_if<Cost>(&r)) return c->rho;
  if (std::holds_alternative<Asymmetric>(r)) return 0;
  return -1;
}
}  // namespace

TEST_SUITE("distinguishing") {
  TEST_CASE("is_distinguishing_set") {
    Graph p = catalog("petersen");
    for (Vertex v = 0; v < 10; ++v) CHECK_FALSE(is_distinguishing_set(p, VertexSet{v}));
    VertexSet all(10);
    std::iota(all.begin(), all.end(), 0);
    CHECK_FALSE(is_distinguishing_set(p, all));
    CHECK_FALSE(is_distinguishing_set(p, VertexSet{}));
    Graph ti = catalog("truncated_icosahedron");
    auto checks = red_edge_checks(ti, edge_orbit_summary(ti));
    REQUIRE_FALSE(checks.empty());
    CHECK(is_distinguishing_set(ti, checks.front().pair));
  }

  TEST_CASE("colored search agrees with the group filter and with complements") {
    std::mt19937_64 rng(17);
    for (const char* name : {"k33", "cube", "petersen", "heawood", "fig5_lambda", "prism:5", "moebius:6"}) {
      Graph g = catalog(name);
      auto aut = automorphism_group(g);
      auto naive = oracle::automorphisms(g);
      for (int trial = 0; trial < 30; ++trial) {
        VertexSet s, rest;
        for (Vertex v = 0; v < g.order(); ++v) (rng() % 3 == 0 ? s : rest).push_back(v);
        const bool colored = is_distinguishing_set(g, s);
        INFO(name << " trial " << trial);
        CHECK(colored == is_distinguishing_set(aut, s));
        CHECK(colored == is_distinguishing_set(g, rest));
        if (g.order() <= 14) CHECK(colored == oracle::distinguishes(naive, s, g.order()));
      }
    }
  }

  TEST_CASE("published costs") {
    auto h = distinguishing_cost(catalog("heawood"));
    CHECK(cost_value(h) == 5);
    CHECK(is_distinguishing_set(catalog("heawood"), std::get<Cost>(h).witness));
    CHECK(cost_value(distinguishing_cost(catalog("pappus"))) == 3);
    CHECK(cost_value(distinguishing_cost(catalog("desargues"))) == 3);
    for (const char* name : {"k4", "k33", "cube", "petersen"})
      CHECK(std::holds_alternative<NotTwoDistinguishable>(distinguishing_cost(catalog(name))));
  }

  TEST_CASE("cost against exhaustive subsets") {
    for (const char* name : {"k4", "k33", "cube", "petersen", "prism:5", "prism:6", "moebius:4", "moebius:5",
                             "path_ladder:4", "cycle:7", "gp(7,2)"}) {
      Graph g = catalog(name);
      INFO(name);
      CHECK(cost_value(distinguishing_cost(g)) == oracle::brute_force_cost(g));
    }
    for (const auto& g : enumerate_cubic(10)) CHECK(cost_value(distinguishing_cost(g)) == oracle::brute_force_cost(g));
  }

  TEST_CASE("witness is the lexicographically least set of the minimum size") {
    Graph g = catalog("prism:5");
    auto c = std::get<Cost>(distinguishing_cost(g));
    auto naive = oracle::automorphisms(g);
    std::vector<char> mask(g.order(), 0);
    std::fill(mask.begin(), mask.begin() + c.rho, 1);
    VertexSet first;
    do {
      VertexSet s;
      for (Vertex v = 0; v < g.order(); ++v)
        if (mask[v]) s.push_back(v);
      if (oracle::distinguishes(naive, s, g.order())) {
        first = s;
        break;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    CHECK(c.witness == first);
  }

  TEST_CASE("asymmetric graphs and budgets") {
    for (const auto& g : enumerate_cubic(12)) {
      if (automorphism_group(g).order() != 1) continue;
      CHECK(std::holds_alternative<Asymmetric>(distinguishing_cost(g)));
      CHECK(distinguishing_number(g) == 1);
    }
    try {
      distinguishing_cost(catalog("heawood"), 50);
      FAIL("expected BudgetExhausted");
    } catch (const BudgetExhausted& e) {
      CHECK(e.exhausted_size() >= 1);
      CHECK(e.exhausted_size() < 5);
    }
  }

  TEST_CASE("distinguishing number") {
    CHECK(distinguishing_number(catalog("k4")) == 4);
    CHECK(distinguishing_number(catalog("petersen")) == 3);
    for (const char* name : {"k33", "cube", "prism:5", "moebius:4", "cycle:5", "cycle:6"})
      CHECK(distinguishing_number(catalog(name)) == oracle::brute_force_distinguishing_number(catalog(name)));
    CHECK_THROWS_AS(distinguishing_number(catalog("k4"), 3), ColorCapExceeded);
  }
}

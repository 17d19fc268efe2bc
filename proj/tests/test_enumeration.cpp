#include "doctest.h"

#include <set>

#include "cubicsym/constructions.hpp"
#include "cubicsym/enumeration.hpp"
#include "cubicsym/search.hpp"
#include "cubicsym/verify.hpp"
#include "oracles.hpp"

using namespace cubicsym;

namespace {
std::vector<std::string> forms(const std::vector<Graph>& gs) {
  std::vector<std::string> out;
  for (const auto& g : gs) out.push_back(canonical_form(g));
  return out;
}
}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("counts against the brute-force oracle") {
    for (int n = 4; n <= 10; n += 2) {
      auto brute = oracle::brute_force_cubic(n, [](const Graph& g) { return canonical_form(g); });
      for (std::size_t i = 0; i < brute.size(); ++i)
        for (std::size_t j = i + 1; j < brute.size(); ++j) CHECK_FALSE(oracle::isomorphic(brute[i], brute[j]));
      auto gen = enumerate_cubic(n);
      INFO("n=" << n);
      CHECK(gen.size() == brute.size());
      auto a = forms(gen), b = forms(brute);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }

  TEST_CASE("frozen counts") {
    const std::size_t expected[] = {1, 2, 5, 19, 85, 509};
    for (int n = 4, i = 0; n <= 14; n += 2, ++i) CHECK(enumerate_cubic(n).size() == expected[i]);
    const std::size_t g4[] = {1, 2, 6, 22};  // girth >= 4, n = 6..12
    for (int n = 6, i = 0; n <= 12; n += 2, ++i) CHECK(enumerate_cubic(n, {1, 4}).size() == g4[i]);
    const std::size_t g5[] = {1, 2, 9, 49};  // girth >= 5, n = 10..16
    for (int n = 10, i = 0; n <= 16; n += 2, ++i) CHECK(enumerate_cubic(n, {1, 5}).size() == g5[i]);
  }

  TEST_CASE("isomorph-free and canonical") {
    for (int n = 4; n <= 12; n += 2) {
      auto gs = enumerate_cubic(n);
      auto f = forms(gs);
      CHECK(std::set<std::string>(f.begin(), f.end()).size() == gs.size());
      for (const auto& g : gs) {
        CHECK(g.is_cubic());
        CHECK(is_connected(g));
        CHECK(canonical_graph(g) == g);
      }
    }
  }

  TEST_CASE("independent of jobs and split into parts") {
    auto one = forms(enumerate_cubic(14, {1}));
    auto four = forms(enumerate_cubic(14, {4}));
    CHECK(one == four);
    std::vector<std::string> merged;
    for (int part = 0; part < 3; ++part) {
      auto p = forms(enumerate_cubic(14, {2, 0, part, 3}));
      merged.insert(merged.end(), p.begin(), p.end());
    }
    std::sort(merged.begin(), merged.end());
    std::sort(one.begin(), one.end());
    CHECK(merged == one);
  }

  TEST_CASE("argument errors") {
    CHECK_THROWS_AS(enumerate_cubic(7), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_cubic(22), std::out_of_range);
    CHECK_THROWS_AS(enumerate_cubic(2), std::out_of_range);
  }

  TEST_CASE("predicates") {
    CHECK(to_string(parse_predicate("girth=5")) == "girth=5");
    CHECK(to_string(parse_predicate("edge-orbits=2")) == "edge-orbits=2");
    CHECK_THROWS_AS(parse_predicate("girth=x"), UnknownPredicate);
    CHECK_THROWS_AS(parse_predicate("planar"), UnknownPredicate);

    std::vector<Predicate> g5{GirthIs{5}, HasConsistentGirthCycle{}, EveryEdgeInGirthCycle{}};
    std::vector<std::string> hits;
    for (int n = 4; n <= 10; n += 2)
      for (const auto& g : filtered_enumeration(n, g5)) hits.push_back(*recognize(g));
    CHECK(hits == std::vector<std::string>{"petersen"});

    std::vector<Predicate> g4{GirthIs{4}, HasConsistentGirthCycle{}, EveryEdgeInGirthCycle{}};
    std::set<std::string> names;
    for (int n = 4; n <= 14; n += 2)
      for (const auto& g : filtered_enumeration(n, g4)) names.insert(recognize(g).value_or("?"));
    CHECK(names == std::set<std::string>{"k33", "cube"});

    std::vector<Predicate> g6{GirthIs{6}, HasConsistentGirthCycle{}, Every3ArcIn6Cycle{}};
    names.clear();
    for (int n = 14; n <= 18; n += 2)
      for (const auto& g : filtered_enumeration(n, g6)) names.insert(recognize(g).value_or("?"));
    CHECK(names == std::set<std::string>{"heawood", "pappus"});

    // two-orbit vertex-transitive graphs on 10 vertices: prism:5 and moebius:5
    std::vector<Predicate> vt2{VertexTransitive{}, EdgeOrbitsAre{2}};
    auto two = filtered_enumeration(10, vt2);
    CHECK(two.size() == 2);
    std::vector<Predicate> at{ArcTransitive{}};
    CHECK(filtered_enumeration(10, at).size() == 1);
  }
}

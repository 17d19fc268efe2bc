#include "doctest.h"

#include <random>

#include "cubicsym/constructions.hpp"
#include "cubicsym/io.hpp"
#include "cubicsym/search.hpp"
#include "oracles.hpp"

using namespace cubicsym;

TEST_SUITE("graph-core") {
  TEST_CASE("build_graph basics") {
    Graph one = build_graph(1, {});
    CHECK(one.order() == 1);
    CHECK(girth(one).acyclic());

    Graph k4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(k4.is_cubic());
    CHECK(k4.size() == 6);

    Graph k33 = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 4}, {2, 5}});
    CHECK(canonical_form(k33) == canonical_form(catalog("k33")));
  }

  TEST_CASE("build_graph rejects bad edges") {
    CHECK_THROWS_AS(build_graph(3, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), GraphError);
    try {
      build_graph(3, {{0, 1}, {2, 5}});
      FAIL("expected GraphError");
    } catch (const GraphError& e) {
      CHECK(std::string(e.what()).find("5") != std::string::npos);
    }
  }

  TEST_CASE("graph6 by hand") {
    Graph k4 = from_graph6("C~");
    CHECK(k4.order() == 4);
    CHECK(k4.size() == 6);
    CHECK(to_graph6(build_graph(1, {})) == "@");
    CHECK(to_graph6(k4) == "C~");
    Graph h = catalog("heawood");
    CHECK(from_graph6(to_graph6(h)) == h);
  }

  TEST_CASE("graph6 extended order form") {
    Graph big = catalog("cycle:70");
    std::string s = to_graph6(big);
    CHECK(s[0] == '~');
    CHECK(from_graph6(s) == big);
  }

  TEST_CASE("graph6 errors carry byte offsets") {
    auto offset_of = [](std::string_view text) -> long {
      try {
        from_graph6(text);
      } catch (const ParseError& e) {
        return static_cast<long>(e.offset());
      }
      return -1;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("C~~") == 2);   // too long
    CHECK(offset_of("C") == 1);     // too short
    CHECK(offset_of("C\x7f") == 1);  // non-printable
    CHECK(offset_of("A`") == 1);    // n=2 uses 1 bit; trailing bits set
  }

  TEST_CASE("edge list round trip") {
    Graph p = catalog("petersen");
    CHECK(from_edge_list(to_edge_list(p)) == p);
    CHECK_THROWS_AS(from_edge_list("0 1\n1 x\n"), ParseError);
  }

  TEST_CASE("girth") {
    CHECK(girth(catalog("petersen")).length() == 5);
    CHECK(girth(catalog("heawood")).length() == 6);
    CHECK(girth(catalog("path:5")).acyclic());
    auto r = girth(catalog("tutte_coxeter"));
    REQUIRE(r.witness);
    CHECK(r.witness->length() == 8);
  }

  TEST_CASE("cycles_of_length against path-walk oracle") {
    CHECK(cycles_of_length(catalog("cycle:6"), 6).size() == 1);
    CHECK(cycles_of_length(catalog("k4"), 3).size() == 4);
    CHECK(cycles_of_length(catalog("petersen"), 5).size() == 12);
    for (const char* name : {"k4", "k33", "cube", "petersen", "heawood", "fig5_lambda", "mobius_kantor"}) {
      Graph g = catalog(name);
      for (int L = 3; L <= 8; ++L) {
        INFO(name << " L=" << L);
        CHECK(cycles_of_length(g, L).size() == oracle::cycle_count(g, L));
      }
    }
    // canonical representation: least rotation/reflection
    for (const auto& c : cycles_of_length(catalog("petersen"), 5)) {
      CHECK(c[0] == *std::min_element(c.vertices().begin(), c.vertices().end()));
      CHECK(c[1] < c[c.length() - 1]);
    }
  }

  TEST_CASE("s-arcs") {
    CHECK(s_arc_count(catalog("k4"), 1) == 12);
    CHECK(s_arc_count(catalog("heawood"), 4) == 336);
    CHECK(s_arc_count(catalog("cycle:5"), 3) == 10);
    CHECK(s_arcs(catalog("heawood"), 4).size() == 336);
    for (const auto& a : s_arcs(catalog("petersen"), 3))
      for (std::size_t i = 0; i + 2 < a.size(); ++i) CHECK(a[i] != a[i + 2]);
  }

  TEST_CASE("cycle coverage") {
    CHECK(cycle_coverage(catalog("heawood"), Every3ArcInCycle{6}));
    CHECK_FALSE(cycle_coverage(catalog("fig5_lambda"), Every3ArcInCycle{6}));
    CHECK(cycle_coverage(catalog("fig5_lambda"), EveryEdgeInCycle{6}));
    CHECK_FALSE(cycle_coverage(catalog("path:6"), EveryEdgeInCycle{6}));
  }

  TEST_CASE("relabel and connectivity") {
    Graph p = catalog("petersen");
    std::vector<Vertex> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(3);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph q = relabel(p, perm);
    CHECK(q.size() == 15);
    CHECK(oracle::isomorphic(p, q));
    CHECK(is_connected(p));
    CHECK_FALSE(is_connected(build_graph(4, {{0, 1}, {2, 3}})));
  }
}

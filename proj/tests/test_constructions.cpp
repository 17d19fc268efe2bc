#include "doctest.h"

#include "cubicsym/constructions.hpp"
#include "cubicsym/distinguishing.hpp"
#include "cubicsym/search.hpp"
#include "cubicsym/symmetry.hpp"
#include "oracles.hpp"

using namespace cubicsym;

TEST_SUITE("constructions") {
  TEST_CASE("catalog table") {
    struct Row {
      const char* name;
      int n;
      std::size_t m;
      int girth;
    };
    const Row table[] = {
        {"k4", 4, 6, 3},           {"k33", 6, 9, 4},
        {"cube", 8, 12, 4},        {"petersen", 10, 15, 5},
        {"dodecahedron", 20, 30, 5}, {"desargues", 20, 30, 6},
        {"mobius_kantor", 16, 24, 6}, {"heawood", 14, 21, 6},
        {"pappus", 18, 27, 6},     {"tutte_coxeter", 30, 45, 8},
        {"icosahedron", 12, 30, 3}, {"truncated_icosahedron", 60, 90, 5},
        {"base_graph", 12, 12, 6}, {"omega18", 18, 21, 6},
        {"fig5_lambda", 18, 27, 6},
    };
    CHECK(catalog_names().size() == std::size(table));
    for (const auto& r : table) {
      Graph g = catalog(r.name);
      INFO(r.name);
      CHECK(g.order() == r.n);
      CHECK(g.size() == r.m);
      CHECK(girth(g).length() == r.girth);
    }
  }

  TEST_CASE("catalog lookups") {
    CHECK(catalog("truncated-icosahedron") == catalog("truncated_icosahedron"));
    CHECK(catalog("gp(10,3)") == generalized_petersen(10, 3));
    CHECK(catalog("prism:4") == prism(4));
    CHECK(is_isomorphic(catalog("prism:4"), catalog("cube")));
    CHECK(is_isomorphic(catalog("moebius:3"), catalog("k33")));
    CHECK(is_isomorphic(catalog("gp(5,2)"), catalog("petersen")));
    CHECK(is_isomorphic(catalog("gp(10,2)"), catalog("dodecahedron")));
    CHECK(is_isomorphic(catalog("gp(8,3)"), catalog("mobius_kantor")));
    CHECK(path_ladder(4).size() == 10);
    CHECK_THROWS_AS(catalog("nosuch"), CatalogError);
    CHECK_THROWS_AS(catalog("gp(4,2)"), CatalogError);
    CHECK_THROWS_AS(catalog("prism:2"), CatalogError);
  }

  TEST_CASE("hand-built graphs") {
    Graph omega = catalog("omega18");
    int leaves = 0;
    for (Vertex v = 0; v < omega.order(); ++v) leaves += omega.degree(v) == 1;
    CHECK(leaves == 6);
    Graph lam = catalog("fig5_lambda");
    CHECK(lam.is_cubic());
    CHECK(cycle_coverage(lam, EveryEdgeInCycle{6}));
    CHECK_FALSE(cycle_coverage(lam, Every3ArcInCycle{6}));
    CHECK(is_isomorphic(catalog("heawood"), oracle::fano_incidence()));
  }

  TEST_CASE("labelings") {
    Graph k4 = catalog("k4");
    auto a = neighborhood_labeling(k4, AdjacencyOrder{});
    CHECK(a.label(k4, 0, 1) == 1);
    CHECK(a.label(k4, 0, 2) == 2);
    CHECK(a.label(k4, 0, 3) == 3);
    auto entry = catalog_lookup("icosahedron");
    REQUIRE(entry.rotation);
    Graph ico = entry.graph;
    auto r = neighborhood_labeling(ico, FromRotation{*entry.rotation});
    for (Vertex u = 0; u < ico.order(); ++u) {
      const auto& order = entry.rotation->order[u];
      for (std::size_t i = 0; i < order.size(); ++i) CHECK(r.label(ico, u, order[i]) == static_cast<int>(i) + 1);
    }
    Graph p = catalog("petersen");
    CHECK(neighborhood_labeling(p, Seeded{7}).labels() == neighborhood_labeling(p, Seeded{7}).labels());
    CHECK(neighborhood_labeling(p, Seeded{7}).labels() != neighborhood_labeling(p, Seeded{8}).labels());
    RotationSystem bad{std::vector<std::vector<Vertex>>(4, std::vector<Vertex>{0, 1, 2})};
    CHECK_THROWS_AS(neighborhood_labeling(k4, FromRotation{bad}), PreconditionError);
    CHECK_THROWS_AS(ArcLabeling(k4, std::vector<std::vector<int>>(4, {1, 1, 2})), PreconditionError);
  }

  TEST_CASE("generalized truncation") {
    auto entry = catalog_lookup("icosahedron");
    Graph t = generalized_truncation(entry.graph, neighborhood_labeling(entry.graph, FromRotation{*entry.rotation}),
                                     cycle_graph(5));
    CHECK(t.order() == 60);
    CHECK(t.is_cubic());
    CHECK(girth(t).length() == 5);
    CHECK(is_isomorphic(t, catalog("truncated_icosahedron")));
    auto prof = transitivity_profile(t);
    CHECK(prof.vertex_transitive);
    CHECK(prof.edge_orbit_count == 2);

    Graph k4 = catalog("k4");
    Graph tk4 = generalized_truncation(k4, neighborhood_labeling(k4, AdjacencyOrder{}), cycle_graph(3));
    CHECK(tk4.order() == 12);
    CHECK(tk4.is_cubic());
    CHECK(is_isomorphic(tk4, classic_truncation(k4)));

    Graph edgeless = build_graph(3, {});
    Graph m = generalized_truncation(catalog("petersen"), neighborhood_labeling(catalog("petersen"), Seeded{1}),
                                     edgeless);
    CHECK(m.is_regular(1));

    // order and degree laws
    for (const char* name : {"k4", "petersen", "heawood", "icosahedron"}) {
      Graph lam = catalog(name);
      const int k = lam.degree(0);
      Graph y = cycle_graph(k);
      Graph tr = generalized_truncation(lam, neighborhood_labeling(lam, Seeded{3}), y);
      CHECK(tr.order() == k * lam.order());
      for (Vertex v = 0; v < tr.order(); ++v) CHECK(tr.degree(v) == y.degree(v % k) + 1);
    }
    CHECK_THROWS_AS(generalized_truncation(k4, neighborhood_labeling(k4, AdjacencyOrder{}), cycle_graph(4)),
                    PreconditionError);
  }

  TEST_CASE("classic truncation") {
    Graph t33 = classic_truncation(catalog("k33"));
    CHECK(t33.order() == 18);
    CHECK(girth(t33).length() == 3);
    CHECK(std::get<Cost>(distinguishing_cost(t33)).rho == 3);
    Graph t4 = classic_truncation(catalog("k4"));
    CHECK(t4.order() == 12);
    CHECK(girth(t4).length() == 3);
    CHECK(oracle::cycle_count(t4, 3) == 4);
    CHECK_THROWS_AS(classic_truncation(catalog("icosahedron")), PreconditionError);
  }

  TEST_CASE("cycle quotients") {
    Graph ti = catalog("truncated_icosahedron");
    CHECK(is_isomorphic(cycle_quotient(ti, edge_orbit_summary(ti)), catalog("icosahedron")));
    Graph t4 = classic_truncation(catalog("k4"));
    CHECK(is_isomorphic(cycle_quotient(t4, edge_orbit_summary(t4)), catalog("k4")));
    Graph p5 = prism(5);
    CHECK_THROWS_AS(cycle_quotient(p5, edge_orbit_summary(p5)), QuotientError);
    Graph pet = catalog("petersen");
    CHECK_THROWS_AS(cycle_quotient(pet, edge_orbit_summary(pet)), QuotientError);
  }
}

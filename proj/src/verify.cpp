#include "cubicsym/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>

#include "cubicsym/constructions.hpp"
#include "cubicsym/distinguishing.hpp"
#include "cubicsym/enumeration.hpp"
#include "cubicsym/io.hpp"
#include "cubicsym/search.hpp"
#include "cubicsym/symmetry.hpp"

namespace cubicsym {

namespace {

int girth_of(const Graph& g) {
  auto r = girth(g);
  return r.acyclic() ? 0 : r.length();
}

bool vertex_transitive(const Graph& g, const PermutationGroup& aut) {
  return g.order() > 0 && orbits(aut, Action::vertices(), g).blocks.size() == 1;
}

bool arc_transitive(const Graph& g, const PermutationGroup& aut) {
  return g.size() > 0 && orbits(aut, Action::arcs(), g).blocks.size() == 1;
}

Json cost_json(const CostResult& r) {
  if (auto* c = std::get_if<Cost>(&r)) return c->rho;
  if (std::holds_alternative<Asymmetric>(r)) return 0;
  return "not-2-distinguishable";
}

bool is_one_of(const Graph& g, std::initializer_list<const char*> names) {
  auto name = recognize(g);
  return name && std::find_if(names.begin(), names.end(), [&](const char* n) { return *name == n; }) != names.end();
}

// Girth-cycle claims of the form: girth g, a consistent g-cycle, every edge
// (or 3-arc) on a g-cycle.
bool girth_cycle_hypothesis(const Graph& g, int gir, bool three_arcs) {
  if (girth_of(g) != gir) return false;
  if (three_arcs ? !cycle_coverage(g, Every3ArcInCycle{6}) : !cycle_coverage(g, EveryEdgeInCycle{gir})) return false;
  return has_consistent_cycle(g, gir);
}

struct ClaimDef {
  std::string id;
  std::string statement;
  int default_max_n = 18;
  int min_girth = 0;
  bool takes_inputs = false;
  std::function<bool(const Graph&)> hypothesis;               // thread-safe
  std::function<bool(const Graph&, Json& details)> conclusion;  // runs on hits only
  std::function<void(const ClaimReport&, std::vector<std::string>&)> notes;
};

void out_of_range_note(const ClaimReport& r, std::vector<std::string>& notes, int order, const char* name) {
  if (r.n_max < order)
    notes.push_back(std::string(name) + " (order " + std::to_string(order) + ") lies outside the scanned range");
}

const std::vector<ClaimDef>& claims() {
  static const std::vector<ClaimDef> table = [] {
    std::vector<ClaimDef> t;

    t.push_back({"thm41-g4",
                 "connected cubic, girth 4, a consistent 4-cycle, every edge on a 4-cycle => K33 or the cube", 14, 4,
                 false, [](const Graph& g) { return girth_cycle_hypothesis(g, 4, false); },
                 [](const Graph& g, Json&) { return is_one_of(g, {"k33", "cube"}); }, nullptr});

    t.push_back({"thm41-g5",
                 "connected cubic, girth 5, a consistent 5-cycle, every edge on a 5-cycle => Petersen or "
                 "dodecahedron",
                 16, 5, false, [](const Graph& g) { return girth_cycle_hypothesis(g, 5, false); },
                 [](const Graph& g, Json&) { return is_one_of(g, {"petersen", "dodecahedron"}); },
                 [](const ClaimReport& r, std::vector<std::string>& n) {
                   out_of_range_note(r, n, 20, "the dodecahedron");
                 }});

    t.push_back({"thm44-g6",
                 "cubic, girth 6, a consistent 6-cycle, every 3-arc on a 6-cycle => Heawood, Pappus or Desargues",
                 18, 6, false, [](const Graph& g) { return girth_cycle_hypothesis(g, 6, true); },
                 [](const Graph& g, Json&) { return is_one_of(g, {"heawood", "pappus", "desargues"}); },
                 [](const ClaimReport& r, std::vector<std::string>& n) {
                   out_of_range_note(r, n, 20, "the Desargues graph");
                 }});

    t.push_back({"lem45", "cubic (g-2)-arc-transitive graph of girth g >= 5 => a consistent g-cycle", 18, 5, false,
                 [](const Graph& g) {
                   const int gir = girth_of(g);
                   if (gir < 5) return false;
                   auto aut = automorphism_group(g);
                   if (!arc_transitive(g, aut)) return false;
                   return transitivity_profile(g, aut).max_s >= gir - 2;
                 },
                 [](const Graph& g, Json& d) {
                   const int gir = girth_of(g);
                   d["girth"] = gir;
                   d["max_s"] = transitivity_profile(g).max_s;
                   auto cc = consistent_cycles(g, gir);
                   d["consistent_cycles"] = cc.size();
                   return !cc.empty();
                 },
                 nullptr});

    t.push_back({"lem46", "cubic 3-arc-transitive graph of girth 6 => a consistent 6-cycle", 18, 6, false,
                 [](const Graph& g) {
                   if (girth_of(g) != 6) return false;
                   auto aut = automorphism_group(g);
                   return arc_transitive(g, aut) && transitivity_profile(g, aut).max_s >= 3;
                 },
                 [](const Graph& g, Json& d) {
                   d["max_s"] = transitivity_profile(g).max_s;
                   auto cc = consistent_cycles(g, 6);
                   d["consistent_cycles"] = cc.size();
                   return !cc.empty();
                 },
                 nullptr});

    t.push_back(
        {"cor49",
         "connected cubic arc-transitive girth 6 => at most 4-arc-regular; s=1: rho=2; s=2: rho<=3; s=3: Pappus or "
         "Desargues with rho=3; s=4: Heawood with rho=5",
         18, 6, false,
         [](const Graph& g) { return girth_of(g) == 6 && arc_transitive(g, automorphism_group(g)); },
         [](const Graph& g, Json& d) {
           auto t = transitivity_profile(g);
           auto cost = distinguishing_cost(g);
           d["max_s"] = t.max_s;
           d["s_regular"] = t.s_regular_at_max;
           d["rho"] = cost_json(cost);
           auto* c = std::get_if<Cost>(&cost);
           if (!c || t.max_s > 4 || !t.s_regular_at_max) return false;
           switch (t.max_s) {
             case 1:
               return c->rho == 2;
             case 2:
               return c->rho <= 3;
             case 3:
               return c->rho == 3 && is_one_of(g, {"pappus", "desargues"});
             case 4:
               return c->rho == 5 && is_one_of(g, {"heawood"});
           }
           return false;
         },
         nullptr});

    t.push_back({"cor410",
                 "cubic arc-transitive, not K4, K33, cube, Petersen or Heawood => rho <= 4", 16, 0, false,
                 [](const Graph& g) {
                   return arc_transitive(g, automorphism_group(g)) &&
                          !is_one_of(g, {"k4", "k33", "cube", "petersen", "heawood"});
                 },
                 [](const Graph& g, Json& d) {
                   auto cost = distinguishing_cost(g);
                   d["rho"] = cost_json(cost);
                   auto* c = std::get_if<Cost>(&cost);
                   return c && c->rho <= 4;
                 },
                 nullptr});

    t.push_back({"thm34", "connected cubic vertex-transitive, girth 5, two edge orbits => rho = 2", 18, 5, true,
                 [](const Graph& g) {
                   if (!g.is_cubic() || !is_connected(g) || girth_of(g) != 5) return false;
                   auto aut = automorphism_group(g);
                   return vertex_transitive(g, aut) && orbits(aut, Action::edges(), g).blocks.size() == 2;
                 },
                 [](const Graph& g, Json& d) {
                   auto cost = distinguishing_cost(g);
                   d["rho"] = cost_json(cost);
                   auto summary = edge_orbit_summary(g);
                   auto checks = red_edge_checks(g, summary);
                   std::size_t good = 0;
                   for (const auto& c : checks)
                     good += c.single_red_between_cycles && c.unique_brbb_path && c.pair_distinguishes;
                   d["red_edges"] = checks.size();
                   d["red_edges_passing_path_argument"] = good;
                   auto* c = std::get_if<Cost>(&cost);
                   return c && c->rho == 2;
                 },
                 nullptr});

    t.push_back({"cor33",
                 "connected cubic vertex-transitive, girth 5, not Petersen or dodecahedron => |G_v| in {1,2,4}", 18,
                 5, true,
                 [](const Graph& g) {
                   if (!g.is_cubic() || !is_connected(g) || girth_of(g) != 5) return false;
                   if (is_one_of(g, {"petersen", "dodecahedron"})) return false;
                   return vertex_transitive(g, automorphism_group(g));
                 },
                 [](const Graph& g, Json& d) {
                   auto sc = stabilizer_class(g);
                   d["stabilizer_order"] = sc.vertex_stabilizer_order;
                   const auto o = sc.vertex_stabilizer_order;
                   return o == 1 || o == 2 || o == 4;
                 },
                 nullptr});
    return t;
  }();
  return table;
}

const ClaimDef& find_claim(std::string_view id) {
  for (const auto& c : claims())
    if (c.id == id) return c;
  throw UnknownClaim("unknown claim '" + std::string(id) + "'");
}

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& c : claims()) ids.push_back(c.id);
  return ids;
}

int default_max_n(std::string_view claim) { return find_claim(claim).default_max_n; }

std::optional<std::string> recognize(const Graph& g) {
  static const std::map<std::string, std::string> known = [] {
    std::map<std::string, std::string> m;
    for (const auto& name : catalog_names()) m.emplace(canonical_form(catalog(name)), name);
    return m;
  }();
  auto it = known.find(canonical_form(g));
  if (it == known.end()) return std::nullopt;
  return it->second;
}

ClaimReport verify_claim(std::string_view id, const VerifyOptions& options) {
  const ClaimDef& def = find_claim(id);
  ClaimReport report;
  report.claim = def.id;
  report.statement = def.statement;
  report.n_max = options.max_n.value_or(def.default_max_n);
  report.n_min = 4;
  if (report.n_max > kMaxEnumerationOrder)
    throw std::out_of_range("--max-n above " + std::to_string(kMaxEnumerationOrder));

  auto add_hit = [&](const Graph& g, std::string name) {
    ClaimHit hit;
    hit.graph6 = canonical_form(g);
    hit.order = g.order();
    hit.name = name.empty() ? recognize(g).value_or("") : std::move(name);
    hit.conclusion = def.conclusion(g, hit.details);
    if (!hit.conclusion && report.pass) {
      report.pass = false;
      report.counterexample = hit.graph6;
    }
    report.hits.push_back(std::move(hit));
  };

  if (def.takes_inputs) {
    report.inputs = options.catalog_inputs.empty() ? std::vector<std::string>{"truncated_icosahedron"}
                                                   : options.catalog_inputs;
    for (const auto& input : report.inputs) {
      Graph g = catalog(input);
      ++report.graphs_scanned;
      if (def.hypothesis(g))
        add_hit(g, input);
      else
        report.notes.push_back("input " + input + " does not satisfy the hypothesis");
    }
  } else if (!options.catalog_inputs.empty()) {
    report.notes.push_back("catalog inputs are ignored by this claim");
  }

  EnumerationOptions eopts;
  eopts.jobs = options.jobs;
  eopts.min_girth = def.min_girth;
  std::atomic<std::uint64_t> scanned{0};
  std::vector<Graph> hits;
  for (int n = 4; n <= report.n_max; n += 2) {
    enumerate_cubic(
        n, eopts,
        [&](const Graph& g) {
          scanned.fetch_add(1, std::memory_order_relaxed);
          return def.hypothesis(g);
        },
        [&](const Graph& g) { hits.push_back(g); });
  }
  report.graphs_scanned += scanned.load();
  for (const auto& g : hits) add_hit(g, "");

  if (def.min_girth > 3)
    report.notes.push_back("census restricted to girth >= " + std::to_string(def.min_girth) +
                           " during generation");
  if (report.hits.empty()) report.notes.push_back("no graph satisfies the hypothesis; the check is vacuous");
  if (def.notes) def.notes(report, report.notes);
  return report;
}

Json to_json(const ClaimReport& r) {
  Json j;
  j["schema"] = "cubicsym.claim";
  j["schema_version"] = kReportSchemaVersion;
  j["claim"] = r.claim;
  j["statement"] = r.statement;
  j["n_range"] = {r.n_min, r.n_max};
  j["inputs"] = r.inputs;
  j["graphs_scanned"] = r.graphs_scanned;
  Json hits = Json::array();
  for (const auto& h : r.hits) {
    Json hj;
    hj["graph6"] = h.graph6;
    hj["order"] = h.order;
    hj["name"] = h.name.empty() ? Json(nullptr) : Json(h.name);
    hj["conclusion"] = h.conclusion;
    hj["details"] = h.details;
    hits.push_back(std::move(hj));
  }
  j["hits"] = std::move(hits);
  j["verdict"] = r.pass ? "pass" : "fail";
  j["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
  j["notes"] = r.notes;
  return j;
}

}  // namespace cubicsym

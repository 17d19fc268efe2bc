#include "cubicsym/report.hpp"

#include <cstdio>
#include <sstream>

#include "cubicsym/io.hpp"
#include "cubicsym/search.hpp"

namespace cubicsym {

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

AnalysisReport analyze(const Graph& g, const AnalysisOptions& options) {
  AnalysisReport r;
  r.graph6 = to_graph6(g);
  r.canonical_form = canonical_form(g);
  r.digest = fnv1a_hex(r.canonical_form);
  r.order = g.order();
  r.size = g.size();
  auto gr = girth(g);
  if (!gr.acyclic()) r.girth = gr.length();
  r.connected = is_connected(g);
  r.cubic = g.is_cubic();

  const auto aut = automorphism_group(g);
  r.aut_order = aut.order();
  for (const auto& p : aut.generators()) r.generators.push_back(p.cycle_notation());

  if (r.connected && g.order() > 0) {
    r.transitivity = transitivity_profile(g, aut);
    r.stabilizer = stabilizer_class(g, aut);
    r.edge_orbits = edge_orbit_summary(g, aut);
    if (r.girth) r.consistent_girth_cycles = consistent_cycles(g, *r.girth).size();
  }
  try {
    r.distinguishing_number = distinguishing_number(g);
  } catch (const ColorCapExceeded&) {
  }
  try {
    r.cost = distinguishing_cost(g, options.budget);
  } catch (const BudgetExhausted& e) {
    r.cost_note = e.what();
  }
  return r;
}

namespace {

Json shape_json(const OrbitShape& shape) {
  Json j;
  j["kind"] = shape_name(shape);
  if (auto* c = std::get_if<DisjointCycles>(&shape)) j["cycle_lengths"] = c->lengths;
  if (auto* o = std::get_if<OtherShape>(&shape)) j["degree_counts"] = o->degrees;
  return j;
}

std::string cost_text(const CostResult& c) {
  if (auto* k = std::get_if<Cost>(&c)) {
    std::string s = std::to_string(k->rho) + " witness {";
    for (std::size_t i = 0; i < k->witness.size(); ++i) s += (i ? "," : "") + std::to_string(k->witness[i]);
    return s + "}";
  }
  if (std::holds_alternative<Asymmetric>(c)) return "0 (asymmetric)";
  return "not 2-distinguishable";
}

}  // namespace

Json to_json(const AnalysisReport& r) {
  Json j;
  j["schema"] = "cubicsym.analysis";
  j["schema_version"] = kReportSchemaVersion;
  j["graph6"] = r.graph6;
  j["canonical_form"] = r.canonical_form;
  j["digest"] = r.digest;
  j["order"] = r.order;
  j["size"] = r.size;
  j["girth"] = r.girth ? Json(*r.girth) : Json(nullptr);
  j["connected"] = r.connected;
  j["cubic"] = r.cubic;
  j["aut_order"] = r.aut_order;
  j["aut_generators"] = r.generators;
  if (r.transitivity) {
    const auto& t = *r.transitivity;
    j["vertex_transitive"] = t.vertex_transitive;
    j["edge_transitive"] = t.edge_transitive;
    j["arc_transitive"] = t.arc_transitive;
    j["max_s"] = t.max_s;
    j["s_regular"] = t.s_regular_at_max;
  } else {
    j["vertex_transitive"] = nullptr;
  }
  if (r.stabilizer) {
    j["vertex_stabilizer_order"] = r.stabilizer->vertex_stabilizer_order;
    j["stabilizer_class"] = to_string(r.stabilizer->kind);
  }
  if (r.edge_orbits) {
    Json orbits = Json::array();
    for (const auto& o : r.edge_orbits->orbits) {
      Json oj;
      oj["size"] = o.edges.size();
      oj["shape"] = shape_json(o.shape);
      orbits.push_back(std::move(oj));
    }
    j["edge_orbits"] = std::move(orbits);
    j["edge_orbit_findings"] = r.edge_orbits->findings;
    j["consistent_girth_cycles"] = r.consistent_girth_cycles;
  }
  j["distinguishing_number"] = r.distinguishing_number ? Json(*r.distinguishing_number) : Json(nullptr);
  Json cost;
  if (!r.cost) {
    cost["status"] = "budget-exhausted";
    cost["note"] = r.cost_note;
  } else if (auto* c = std::get_if<Cost>(&*r.cost)) {
    cost["status"] = "ok";
    cost["rho"] = c->rho;
    cost["witness"] = c->witness;
  } else if (std::holds_alternative<Asymmetric>(*r.cost)) {
    // Cost is only defined when D = 2; asymmetric graphs report 0 by convention.
    cost["status"] = "asymmetric";
    cost["rho"] = 0;
    cost["witness"] = Json::array();
  } else {
    cost["status"] = "not-2-distinguishable";
  }
  j["distinguishing_cost"] = std::move(cost);
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "graph6            " << r.graph6 << "\n";
  out << "canonical digest  " << r.digest << "\n";
  out << "order, size       " << r.order << ", " << r.size << "\n";
  out << "girth             " << (r.girth ? std::to_string(*r.girth) : "acyclic") << "\n";
  out << "connected         " << (r.connected ? "yes" : "no") << "\n";
  out << "aut order         " << r.aut_order << "\n";
  if (r.transitivity) {
    const auto& t = *r.transitivity;
    out << "vertex-transitive " << (t.vertex_transitive ? "yes" : "no") << "\n";
    out << "edge-transitive   " << (t.edge_transitive ? "yes" : "no") << "\n";
    out << "arc-transitive    " << (t.arc_transitive ? "yes" : "no") << "\n";
    if (t.arc_transitive)
      out << "max s             " << t.max_s << (t.s_regular_at_max ? " (s-regular)" : "") << "\n";
  }
  if (r.stabilizer)
    out << "stabilizer        order " << r.stabilizer->vertex_stabilizer_order << ", "
        << to_string(r.stabilizer->kind) << "\n";
  if (r.edge_orbits) {
    out << "edge orbits       " << r.edge_orbits->orbits.size() << "\n";
    for (const auto& o : r.edge_orbits->orbits) {
      out << "  " << o.edges.size() << " edges, " << shape_name(o.shape);
      if (auto* c = std::get_if<DisjointCycles>(&o.shape)) {
        out << " [";
        for (std::size_t i = 0; i < c->lengths.size(); ++i) out << (i ? " " : "") << c->lengths[i];
        out << "]";
      }
      out << "\n";
    }
    for (const auto& f : r.edge_orbits->findings) out << "  finding: " << f << "\n";
    out << "consistent girth cycles " << r.consistent_girth_cycles << "\n";
  }
  out << "distinguishing number " << (r.distinguishing_number ? std::to_string(*r.distinguishing_number) : "> cap")
      << "\n";
  out << "distinguishing cost   " << (r.cost ? cost_text(*r.cost) : "unknown: " + r.cost_note) << "\n";
  return out.str();
}

std::string to_text(const ClaimReport& r) {
  std::ostringstream out;
  out << r.claim << ": " << r.statement << "\n";
  out << "range n = " << r.n_min << ".." << r.n_max << ", graphs scanned " << r.graphs_scanned << "\n";
  for (const auto& h : r.hits) {
    out << "  hit " << (h.name.empty() ? "(unnamed)" : h.name) << " n=" << h.order << " "
        << (h.conclusion ? "ok" : "FAILS") << " " << h.graph6;
    if (!h.details.empty()) out << " " << h.details.dump();
    out << "\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  out << "verdict " << (r.pass ? "PASS" : "FAIL") << "\n";
  if (r.counterexample) out << "counterexample " << *r.counterexample << "\n";
  return out.str();
}

}  // namespace cubicsym

#include "cubicsym/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cubicsym/distinguishing.hpp"
#include "cubicsym/search.hpp"

namespace cubicsym {

namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw PreconditionError(std::string(what) + " requires a connected graph");
}

std::size_t orbit_count(const PermutationGroup& aut, Action action, const Graph& g) {
  return orbits(aut, action, g).blocks.size();
}

OrbitShape classify(const Graph& g, const std::vector<Edge>& edges) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int top = 0;
  for (const auto& row : adj) top = std::max(top, static_cast<int>(row.size()));
  std::vector<int> degrees(static_cast<std::size_t>(top) + 1, 0);
  for (const auto& row : adj) ++degrees[row.size()];

  if (top == 1 && degrees[0] == 0) return PerfectMatching{};
  if (top == 2 && degrees[1] == 0) {
    DisjointCycles cycles;
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s] || adj[s].empty()) continue;
      int len = 0;
      Vertex prev = -1, cur = s;
      while (!seen[cur]) {
        seen[cur] = 1;
        ++len;
        Vertex next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
        prev = cur;
        cur = next;
      }
      cycles.lengths.push_back(len);
    }
    std::sort(cycles.lengths.begin(), cycles.lengths.end());
    return cycles;
  }
  return OtherShape{degrees};
}

std::vector<Vertex> restriction(const Permutation& p, std::span<const Vertex> points) {
  std::vector<Vertex> out;
  for (Vertex x : points) out.push_back(p(x));
  return out;
}

}  // namespace

std::string to_string(StabilizerKind kind) {
  switch (kind) {
    case StabilizerKind::NotVertexTransitive:
      return "not-vertex-transitive";
    case StabilizerKind::GRR:
      return "grr";
    case StabilizerKind::Rigid:
      return "rigid";
    case StabilizerKind::Flexible:
      return "flexible";
    case StabilizerKind::Unclassified:
      return "unclassified";
  }
  return "?";
}

std::string shape_name(const OrbitShape& shape) {
  if (std::holds_alternative<PerfectMatching>(shape)) return "perfect-matching";
  if (std::holds_alternative<DisjointCycles>(shape)) return "disjoint-cycles";
  return "other";
}

TransitivityProfile transitivity_profile(const Graph& g) { return transitivity_profile(g, automorphism_group(g)); }

TransitivityProfile transitivity_profile(const Graph& g, const PermutationGroup& aut) {
  require_connected(g, "transitivity_profile");
  TransitivityProfile t;
  t.vertex_transitive = g.order() > 0 && orbit_count(aut, Action::vertices(), g) == 1;
  t.edge_orbit_count = orbit_count(aut, Action::edges(), g);
  t.edge_transitive = t.edge_orbit_count == 1;
  t.arc_transitive = g.size() > 0 && orbit_count(aut, Action::arcs(), g) == 1;
  if (t.arc_transitive) {
    t.max_s = 1;
    for (int s = 2; s <= kMaxArcLength; ++s) {
      if (orbit_count(aut, Action::s_arcs(s), g) != 1) break;
      t.max_s = s;
    }
    t.s_regular_at_max = aut.order() == s_arc_count(g, t.max_s);
  }
  return t;
}

EdgeOrbitSummary edge_orbit_summary(const Graph& g) { return edge_orbit_summary(g, automorphism_group(g)); }

EdgeOrbitSummary edge_orbit_summary(const Graph& g, const PermutationGroup& aut) {
  require_connected(g, "edge_orbit_summary");
  auto part = orbits(aut, Action::edges(), g);
  EdgeOrbitSummary summary;
  for (const auto& block : part.blocks) {
    EdgeOrbit orbit;
    for (std::size_t i : block) orbit.edges.emplace_back(part.points[i][0], part.points[i][1]);
    std::sort(orbit.edges.begin(), orbit.edges.end());
    orbit.shape = classify(g, orbit.edges);
    summary.orbits.push_back(std::move(orbit));
  }

  const bool vt = g.order() > 0 && orbit_count(aut, Action::vertices(), g) == 1;
  if (g.is_cubic() && vt && summary.orbits.size() == 2) {
    int matchings = 0, cycles = 0;
    for (const auto& o : summary.orbits) {
      matchings += std::holds_alternative<PerfectMatching>(o.shape);
      cycles += std::holds_alternative<DisjointCycles>(o.shape);
    }
    if (matchings != 1 || cycles != 1)
      summary.findings.push_back("two edge orbits of a cubic vertex-transitive graph are not a perfect matching "
                                 "plus disjoint cycles");
  }
  return summary;
}

StabilizerClass stabilizer_class(const Graph& g) { return stabilizer_class(g, automorphism_group(g)); }

StabilizerClass stabilizer_class(const Graph& g, const PermutationGroup& aut) {
  StabilizerClass c;
  if (g.order() == 0) return c;
  const Vertex v0 = 0;
  c.vertex_stabilizer_order = stabilizer(aut, std::span<const Vertex>(&v0, 1), StabilizerMode::PointwiseVertex).order();
  if (!is_connected(g) || orbit_count(aut, Action::vertices(), g) != 1) return c;
  switch (c.vertex_stabilizer_order) {
    case 1:
      c.kind = StabilizerKind::GRR;
      break;
    case 2:
      c.kind = StabilizerKind::Rigid;
      break;
    case 3:
      c.kind = StabilizerKind::Unclassified;
      break;
    default:
      c.kind = StabilizerKind::Flexible;
  }
  return c;
}

std::uint64_t local_action_order(const Graph& g, Vertex v) { return local_action_order(g, automorphism_group(g), v); }

std::uint64_t local_action_order(const Graph& g, const PermutationGroup& aut, Vertex v) {
  require_connected(g, "local_action_order");
  auto stab = stabilizer(aut, std::span<const Vertex>(&v, 1), StabilizerMode::PointwiseVertex);
  std::set<std::vector<Vertex>> induced;
  for (const auto& p : stab.elements()) induced.insert(restriction(p, g.neighbors(v)));
  return induced.size();
}

namespace {

std::optional<Permutation> rotation_witness(const Graph& g, const CycleSeq& c) {
  const std::size_t len = c.length();
  std::vector<std::pair<Vertex, Vertex>> forward, backward;
  for (std::size_t i = 0; i < len; ++i) {
    forward.emplace_back(c[i], c[(i + 1) % len]);
    backward.emplace_back(c[i], c[(i + len - 1) % len]);
  }
  if (auto w = extend_partial_map(g, forward)) return w;
  if (auto w = extend_partial_map(g, backward)) return w->inverse();
  return std::nullopt;
}

}  // namespace

std::vector<ConsistentCycle> consistent_cycles(const Graph& g, int length) {
  require_connected(g, "consistent_cycles");
  std::vector<ConsistentCycle> out;
  for (auto& c : cycles_of_length(g, length))
    if (auto w = rotation_witness(g, c)) out.push_back({std::move(c), std::move(*w)});
  return out;
}

bool has_consistent_cycle(const Graph& g, int length) {
  require_connected(g, "has_consistent_cycle");
  for (const auto& c : cycles_of_length(g, length))
    if (rotation_witness(g, c)) return true;
  return false;
}

bool local_fixity_check(const Graph& g, Edge uv) { return local_fixity_check(g, automorphism_group(g), uv); }

bool local_fixity_check(const Graph& g, const PermutationGroup& aut, Edge uv) {
  auto [u, v] = uv;
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
    throw PreconditionError("local_fixity_check needs an edge of the graph");
  std::vector<Vertex> fixed{u, v};
  for (Vertex x : g.neighbors(u)) fixed.push_back(x);
  for (Vertex x : g.neighbors(v)) fixed.push_back(x);
  std::sort(fixed.begin(), fixed.end());
  fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
  return stabilizer(aut, fixed, StabilizerMode::PointwiseSet).order() == 1;
}

// ---------------------------------------------------------------------------

namespace {

struct Coloring {
  const Graph& g;
  std::map<Edge, bool> red;  // edge (min,max) -> is red

  bool is_red(Vertex a, Vertex b) const { return red.at({std::min(a, b), std::max(a, b)}); }
  std::vector<Vertex> black_neighbors(Vertex x) const {
    std::vector<Vertex> out;
    for (Vertex y : g.neighbors(x))
      if (!is_red(x, y)) out.push_back(y);
    return out;
  }
  Vertex red_neighbor(Vertex x) const {
    for (Vertex y : g.neighbors(x))
      if (is_red(x, y)) return y;
    return -1;
  }

  // Simple paths x0..x4 colored black, red, black, black.
  int brbb_paths(Vertex from, Vertex to) const {
    int count = 0;
    for (Vertex x1 : black_neighbors(from)) {
      Vertex x2 = red_neighbor(x1);
      if (x2 < 0 || x2 == from) continue;
      for (Vertex x3 : black_neighbors(x2)) {
        if (x3 == from || x3 == x1) continue;
        for (Vertex x4 : black_neighbors(x3))
          if (x4 == to && x4 != x2 && x4 != x1 && x4 != from) ++count;
      }
    }
    return count;
  }
};

}  // namespace

std::vector<RedEdgeCheck> red_edge_checks(const Graph& g, const EdgeOrbitSummary& summary) {
  const EdgeOrbit* matching = nullptr;
  const EdgeOrbit* cycles = nullptr;
  for (const auto& o : summary.orbits) {
    if (std::holds_alternative<PerfectMatching>(o.shape)) matching = &o;
    if (std::holds_alternative<DisjointCycles>(o.shape)) cycles = &o;
  }
  if (!matching || !cycles || summary.orbits.size() != 2 || !g.is_cubic()) return {};

  Coloring col{g, {}};
  for (const auto& e : matching->edges) col.red[e] = true;
  for (const auto& e : cycles->edges) col.red[e] = false;

  // Black cycle id of every vertex.
  std::vector<int> cycle_of(g.order(), -1);
  int ncycles = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (cycle_of[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    cycle_of[s] = ncycles;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : col.black_neighbors(x))
        if (cycle_of[y] < 0) {
          cycle_of[y] = ncycles;
          stack.push_back(y);
        }
    }
    ++ncycles;
  }

  std::vector<RedEdgeCheck> out;
  for (auto [v1, u1] : matching->edges) {
    RedEdgeCheck check;
    check.red = {v1, u1};
    int between = 0;
    for (auto [a, b] : matching->edges) {
      const int ca = cycle_of[a], cb = cycle_of[b];
      if ((ca == cycle_of[v1] && cb == cycle_of[u1]) || (ca == cycle_of[u1] && cb == cycle_of[v1])) ++between;
    }
    check.single_red_between_cycles = between == 1;

    bool unique = true, distinguishes = true;
    for (Vertex v2 : col.black_neighbors(v1)) {
      for (Vertex u2 : col.black_neighbors(u1)) {
        for (Vertex u3 : col.black_neighbors(u2)) {
          if (u3 == u1) continue;
          const int paths = col.brbb_paths(v2, u3) + col.brbb_paths(u3, v2);
          unique = unique && paths == 1;
          std::vector<Vertex> pair{std::min(v2, u3), std::max(v2, u3)};
          distinguishes = distinguishes && is_distinguishing_set(g, pair);
          if (check.pair.empty() || pair < check.pair) check.pair = pair;
        }
      }
    }
    check.unique_brbb_path = unique;
    check.pair_distinguishes = distinguishes;
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace cubicsym

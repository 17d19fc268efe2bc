#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cubicsym/graph.hpp"
#include "cubicsym/perm.hpp"

namespace cubicsym {

struct TransitivityProfile {
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool arc_transitive = false;
  int max_s = 0;  // 0 unless arc-transitive; the scan stops at kMaxArcLength
  bool s_regular_at_max = false;
  std::size_t edge_orbit_count = 0;
};

inline constexpr int kMaxArcLength = 7;

struct PerfectMatching {
  bool operator==(const PerfectMatching&) const = default;
};
/// Orbit edges form vertex-disjoint cycles; lengths sorted ascending.
struct DisjointCycles {
  std::vector<int> lengths;
  bool operator==(const DisjointCycles&) const = default;
};
/// Anything else. degrees[d] counts vertices of degree d in the orbit's
/// spanning subgraph.
struct OtherShape {
  std::vector<int> degrees;
  bool operator==(const OtherShape&) const = default;
};
using OrbitShape = std::variant<PerfectMatching, DisjointCycles, OtherShape>;

struct EdgeOrbit {
  std::vector<Edge> edges;  // sorted
  OrbitShape shape;
};

struct EdgeOrbitSummary {
  std::vector<EdgeOrbit> orbits;  // ordered by least edge
  /// Structural surprises; for a cubic vertex-transitive graph with two edge
  /// orbits one orbit must be a perfect matching and the other cycles.
  std::vector<std::string> findings;
};

enum class StabilizerKind { NotVertexTransitive, GRR, Rigid, Flexible, Unclassified };

struct StabilizerClass {
  std::uint64_t vertex_stabilizer_order = 0;  // of vertex 0
  StabilizerKind kind = StabilizerKind::NotVertexTransitive;
};

std::string to_string(StabilizerKind kind);
std::string shape_name(const OrbitShape& shape);

// Every operation below accepts the materialized automorphism group to avoid
// recomputing it; the single-argument forms compute it themselves.

TransitivityProfile transitivity_profile(const Graph& g);
TransitivityProfile transitivity_profile(const Graph& g, const PermutationGroup& aut);

EdgeOrbitSummary edge_orbit_summary(const Graph& g);
EdgeOrbitSummary edge_orbit_summary(const Graph& g, const PermutationGroup& aut);

StabilizerClass stabilizer_class(const Graph& g);
StabilizerClass stabilizer_class(const Graph& g, const PermutationGroup& aut);

std::uint64_t local_action_order(const Graph& g, Vertex v);
std::uint64_t local_action_order(const Graph& g, const PermutationGroup& aut, Vertex v);

struct ConsistentCycle {
  CycleSeq cycle;
  Permutation witness;  // witness(c[i]) == c[i+1 mod L]
};

std::vector<ConsistentCycle> consistent_cycles(const Graph& g, int length);
/// Stops at the first consistent cycle.
bool has_consistent_cycle(const Graph& g, int length);

/// True iff only the identity fixes u, v and all their neighbors.
bool local_fixity_check(const Graph& g, Edge uv);
bool local_fixity_check(const Graph& g, const PermutationGroup& aut, Edge uv);

// ---------------------------------------------------------------------------
// Red/black structure of cubic two-orbit graphs: red = the perfect-matching
// orbit, black = the cycle orbit.

struct RedEdgeCheck {
  Edge red;
  bool single_red_between_cycles = false;  // the only red edge joining its two black cycles
  bool unique_brbb_path = false;           // every choice of v2, u2, u3 gives a unique BRBB 4-path
  bool pair_distinguishes = false;         // {v2, u3} has trivial setwise stabilizer
  std::vector<Vertex> pair;                // {v2, u3} for the least choice, ascending
};

/// One entry per red edge; empty when the summary has no matching orbit plus
/// a cycle orbit covering the remaining edges.
std::vector<RedEdgeCheck> red_edge_checks(const Graph& g, const EdgeOrbitSummary& summary);

}  // namespace cubicsym

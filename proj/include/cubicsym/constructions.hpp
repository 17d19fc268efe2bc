#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cubicsym/graph.hpp"
#include "cubicsym/symmetry.hpp"

namespace cubicsym {

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cyclic neighbor order at each vertex (a combinatorial embedding).
struct RotationSystem {
  std::vector<std::vector<Vertex>> order;
};

struct CatalogEntry {
  Graph graph;
  std::optional<RotationSystem> rotation;
};

/// Named graphs. Vertex numbering is fixed:
///  - gp(n,k): outer cycle 0..n-1, inner vertex n+i joined to i and n+(i+k mod n)
///  - prism(k): two k-cycles 0..k-1 and k..2k-1 with rungs i ~ k+i
///  - moebius(k): 2k-cycle plus chords i ~ i+k
///  - path_ladder(k): two k-paths with rungs (not cubic)
///  - heawood, pappus, fig5_lambda, omega18, base_graph: v_i = i, u_i = 6+i,
///    w_i = 12+i (heawood has only w0 = 12, w1 = 13)
///  - icosahedron: 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom
///  - truncated_icosahedron: vertex (u, label i) is 5u + i - 1
CatalogEntry catalog_build(std::string_view name, std::span<const int> params = {});

/// Accepts "name", "name:p1,p2" or "name(p1,p2)"; '-' and '_' are interchangeable.
CatalogEntry catalog_lookup(std::string_view text);
Graph catalog(std::string_view text);

/// Names that take no parameters, in listing order.
std::vector<std::string> catalog_names();

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph generalized_petersen(int n, int k);
Graph prism(int k);
Graph moebius(int k);
Graph path_ladder(int k);
Graph lcf_graph(int n, std::span<const int> jumps);

// ---------------------------------------------------------------------------
// Truncation

/// Labels 1..deg(u) on the arcs leaving u; labels[u][j] belongs to the arc
/// from u to its j-th neighbor in ascending order.
class ArcLabeling {
 public:
  ArcLabeling() = default;
  /// Throws PreconditionError unless every vertex's labels are a bijection
  /// onto 1..deg.
  ArcLabeling(const Graph& host, std::vector<std::vector<int>> labels);

  int label(const Graph& host, Vertex u, Vertex w) const;
  const std::vector<std::vector<int>>& labels() const { return labels_; }

 private:
  std::vector<std::vector<int>> labels_;
};

struct AdjacencyOrder {};
struct FromRotation {
  RotationSystem rotation;
};
struct Seeded {
  std::uint64_t seed = 0;
};
using LabelingStrategy = std::variant<AdjacencyOrder, FromRotation, Seeded>;

ArcLabeling neighborhood_labeling(const Graph& g, const LabelingStrategy& strategy);

/// T(lambda, rho; y): vertex (u, v_i) is u*k + (i-1).
Graph generalized_truncation(const Graph& lambda, const ArcLabeling& rho, const Graph& y);

/// Truncation by a triangle.
Graph classic_truncation(const Graph& g, const LabelingStrategy& strategy = AdjacencyOrder{});

class QuotientError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Contracts each cycle of the orbit tagged DisjointCycles; the remaining
/// edges become the quotient's edges. Vertices of the quotient are numbered
/// by the least original vertex of each cycle.
Graph cycle_quotient(const Graph& g, const EdgeOrbitSummary& summary);

}  // namespace cubicsym

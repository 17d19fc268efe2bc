#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cubicsym/graph.hpp"
#include "cubicsym/perm.hpp"

namespace cubicsym {

/// Vertex colors; the used color indices must form the range 0..k-1.
using VertexColoring = std::vector<int>;

/// Ordered sequence of disjoint cells covering the vertex set.
struct OrderedPartition {
  std::vector<std::vector<Vertex>> cells;

  bool discrete() const;
  std::vector<std::size_t> cell_sizes() const;
};

/// Coarsest equitable partition refining `initial`. Cells start in color
/// order; a split cell keeps its place and its fragments are ordered by the
/// number of neighbors in the splitting cell.
OrderedPartition refine_coloring(const Graph& g, const VertexColoring& initial);

/// Everything one individualization-refinement run produces.
struct SearchResult {
  std::vector<Permutation> generators;  // generate the full (colored) group
  std::vector<Vertex> orbit_label;      // least vertex of each vertex orbit
  /// canonical_position[v] is v's label in the canonical relabeling. Empty
  /// unless requested.
  std::vector<Vertex> canonical_position;
  std::uint64_t leaves = 0;
};

struct SearchOptions {
  bool canonical = false;
  const VertexColoring* coloring = nullptr;
};

SearchResult run_search(const Graph& g, SearchOptions options);

/// Full automorphism group of g (preserving `coloring` when given), with
/// every element materialized.
PermutationGroup automorphism_group(const Graph& g, const std::optional<VertexColoring>& coloring = std::nullopt,
                                    std::uint64_t cap = kDefaultGroupCap);

/// First automorphism, in search order, that extends the injective partial
/// map given as (from, to) pairs; nullopt when none exists.
std::optional<Permutation> extend_partial_map(const Graph& g, std::span<const std::pair<Vertex, Vertex>> partial);

/// Canonical relabeling of g: equal for two graphs iff they are isomorphic.
Graph canonical_graph(const Graph& g);

/// graph6 text of the canonical relabeling; the leaf chosen is the one whose
/// upper-triangle adjacency bit string is lexicographically least.
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace cubicsym

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cubicsym {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Raised when an edge list does not describe a simple graph.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by operations whose documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in compressed rows; every row is strictly ascending.
/// Instances are immutable once built and may be shared between threads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph, rejecting loops, out-of-range endpoints and duplicates.
  /// Edges may be given in any orientation and order.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return adj_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool is_regular(int k) const;
  bool is_cubic() const { return is_regular(3); }
  int max_degree() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adj_;
};

Graph build_graph(int n, std::span<const Edge> edges);
Graph build_graph(int n, std::initializer_list<Edge> edges);

bool is_connected(const Graph& g);

/// The graph whose vertex v is renamed to relabel[v].
Graph relabel(const Graph& g, std::span<const Vertex> relabel);

// ---------------------------------------------------------------------------
// Arcs and cycles

/// An s-arc x0..xs: consecutive vertices adjacent, no immediate backtracking.
using ArcSeq = std::vector<Vertex>;

/// A cycle v0..v(g-1), stored as the lexicographically least of its 2g
/// rotations and reflections.
class CycleSeq {
 public:
  CycleSeq() = default;
  /// Canonicalizes an arbitrary traversal of the cycle.
  static CycleSeq from_traversal(std::vector<Vertex> walk);

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t length() const { return vertices_.size(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  auto operator<=>(const CycleSeq&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

struct Acyclic {
  bool operator==(const Acyclic&) const = default;
};

struct GirthResult {
  std::variant<Acyclic, int> girth;
  std::optional<CycleSeq> witness;

  bool acyclic() const { return std::holds_alternative<Acyclic>(girth); }
  /// Throws std::logic_error for forests.
  int length() const;
};

GirthResult girth(const Graph& g);

/// Every cycle of exactly `length` vertices, canonical and sorted.
std::vector<CycleSeq> cycles_of_length(const Graph& g, int length);

/// Number of s-arcs, counted without materializing them.
std::uint64_t s_arc_count(const Graph& g, int s);

/// All s-arcs in lexicographic order.
std::vector<ArcSeq> s_arcs(const Graph& g, int s);

struct EveryEdgeInCycle {
  int length;
};
struct Every3ArcInCycle {
  int length;
};
using CoverageMode = std::variant<EveryEdgeInCycle, Every3ArcInCycle>;

bool cycle_coverage(const Graph& g, CoverageMode mode);

}  // namespace cubicsym

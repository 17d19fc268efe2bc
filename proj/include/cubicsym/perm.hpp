#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicsym/graph.hpp"

namespace cubicsym {

/// A bijection of {0, ..., n-1}; position i holds the image of i.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  std::span<const Vertex> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Disjoint-cycle notation, fixed points omitted, "()" for the identity.
  std::string cycle_notation() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Vertex> images_;
};

/// (p * q)(v) = p(q(v)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

class GroupTooLarge : public std::runtime_error {
 public:
  explicit GroupTooLarge(std::uint64_t cap)
      : std::runtime_error("group too large: order exceeds cap " + std::to_string(cap)), cap_(cap) {}
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

inline constexpr std::uint64_t kDefaultGroupCap = std::uint64_t{1} << 20;

/// Finitely generated permutation group. Groups built by `close_generators`
/// carry every element, sorted by image sequence.
class PermutationGroup {
 public:
  PermutationGroup() = default;
  PermutationGroup(int degree, std::vector<Permutation> generators,
                   std::optional<std::vector<Permutation>> elements);

  int degree() const { return degree_; }
  std::span<const Permutation> generators() const { return generators_; }
  bool materialized() const { return elements_.has_value(); }
  /// Throws std::logic_error if the group was not materialized.
  std::span<const Permutation> elements() const;
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;

 private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::optional<std::vector<Permutation>> elements_;
};

PermutationGroup close_generators(int degree, std::span<const Permutation> generators,
                                  std::uint64_t cap = kDefaultGroupCap);

// ---------------------------------------------------------------------------
// Actions

enum class ActionKind { Vertices, Edges, Arcs, SArcs };

struct Action {
  ActionKind kind = ActionKind::Vertices;
  int s = 1;  // only for SArcs

  static Action vertices() { return {ActionKind::Vertices, 0}; }
  static Action edges() { return {ActionKind::Edges, 0}; }
  static Action arcs() { return {ActionKind::Arcs, 1}; }
  static Action s_arcs(int s) { return {ActionKind::SArcs, s}; }
};

/// Orbit partition of an induced action. `points` lists the acted-on objects
/// as vertex tuples in sorted order: {v}, {u,v} with u<v for edges, (u,v) for
/// arcs, (x0..xs) for s-arcs. Each block holds indices into `points`, blocks
/// ordered by their least index.
struct OrbitPartition {
  std::vector<std::vector<Vertex>> points;
  std::vector<std::vector<std::size_t>> blocks;

  std::size_t block_of(std::size_t point) const;
};

/// Uses only the generators, so unmaterialized groups are fine.
OrbitPartition orbits(const PermutationGroup& group, Action action, const Graph& host);

/// Vertex orbits as an orbit label per vertex (the least vertex of the orbit).
std::vector<Vertex> vertex_orbit_labels(int degree, std::span<const Permutation> generators);

enum class StabilizerMode { PointwiseVertex, SetwiseSet, PointwiseSet };

/// Subgroup fixing `target` in the given mode; requires a materialized group.
/// PointwiseVertex reads target[0].
PermutationGroup stabilizer(const PermutationGroup& group, std::span<const Vertex> target, StabilizerMode mode);

}  // namespace cubicsym

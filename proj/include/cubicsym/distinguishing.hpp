#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cubicsym/graph.hpp"
#include "cubicsym/perm.hpp"

namespace cubicsym {

/// Ascending, distinct vertex indices.
using VertexSet = std::vector<Vertex>;

struct Cost {
  int rho = 0;
  VertexSet witness;  // lexicographically least distinguishing set of size rho
  bool operator==(const Cost&) const = default;
};
struct NotTwoDistinguishable {
  bool operator==(const NotTwoDistinguishable&) const = default;
};
/// Trivial automorphism group: D = 1 and the cost is reported as 0.
struct Asymmetric {
  bool operator==(const Asymmetric&) const = default;
};
using CostResult = std::variant<Cost, NotTwoDistinguishable, Asymmetric>;

/// The search ran out of its candidate budget. Every set size up to
/// `exhausted_size` was fully checked without finding a distinguishing set.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(int exhausted_size, std::uint64_t tested)
      : std::runtime_error("distinguishing-cost budget exhausted after " + std::to_string(tested) +
                           " candidate sets; sizes <= " + std::to_string(exhausted_size) + " fully checked"),
        exhausted_size_(exhausted_size),
        tested_(tested) {}
  int exhausted_size() const { return exhausted_size_; }
  std::uint64_t tested() const { return tested_; }

 private:
  int exhausted_size_;
  std::uint64_t tested_;
};

class ColorCapExceeded : public std::runtime_error {
 public:
  explicit ColorCapExceeded(int cap)
      : std::runtime_error("no distinguishing coloring with at most " + std::to_string(cap) + " colors"), cap_(cap) {}
  int cap() const { return cap_; }

 private:
  int cap_;
};

/// Colored automorphism search with S and its complement as the two colors.
bool is_distinguishing_set(const Graph& g, const VertexSet& s);

/// Same question answered by filtering a materialized group.
bool is_distinguishing_set(const PermutationGroup& aut, const VertexSet& s);

/// Exact minimum size of a distinguishing set. `budget` bounds the number of
/// candidate sets tested.
CostResult distinguishing_cost(const Graph& g, std::optional<std::uint64_t> budget = std::nullopt);

inline constexpr int kDefaultColorCap = 8;

int distinguishing_number(const Graph& g, int color_cap = kDefaultColorCap);

}  // namespace cubicsym

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cubicsym/graph.hpp"

namespace cubicsym {

inline constexpr int kMaxEnumerationOrder = 20;

struct EnumerationOptions {
  int jobs = 1;
  /// Only graphs of girth >= min_girth are generated; 0 or 3 means no bound.
  int min_girth = 0;
  /// Restart support: only the subtrees with index % parts == part are run.
  int part = 0;
  int parts = 1;
};

/// Called on worker threads; must be thread-safe. Returning false drops the graph.
using GraphFilter = std::function<bool(const Graph&)>;
/// Called on the calling thread, in deterministic order.
using GraphSink = std::function<void(const Graph&)>;

/// Connected cubic graphs on n vertices, one canonical representative per
/// isomorphism class. Output order does not depend on `jobs`.
void enumerate_cubic(int n, const EnumerationOptions& options, const GraphFilter& filter, const GraphSink& sink);
std::vector<Graph> enumerate_cubic(int n, const EnumerationOptions& options = {});

// ---------------------------------------------------------------------------
// Predicates

struct GirthIs {
  int g;
};
struct VertexTransitive {};
struct ArcTransitive {};
struct HasConsistentGirthCycle {};
struct EveryEdgeInGirthCycle {};
struct Every3ArcIn6Cycle {};
struct EdgeOrbitsAre {
  int t;
};
using Predicate = std::variant<GirthIs, VertexTransitive, ArcTransitive, HasConsistentGirthCycle,
                               EveryEdgeInGirthCycle, Every3ArcIn6Cycle, EdgeOrbitsAre>;

class UnknownPredicate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "girth=5", "vertex-transitive", "arc-transitive", "consistent-girth-cycle",
/// "every-edge-in-girth-cycle", "every-3-arc-in-6-cycle", "edge-orbits=2".
Predicate parse_predicate(std::string_view text);
std::string to_string(const Predicate& p);

/// Evaluates cheap predicates (girth, coverage) before group computations.
bool satisfies_all(const Graph& g, std::span<const Predicate> predicates);

/// Graphs on n vertices passing every predicate; a girth predicate also
/// prunes generation.
std::vector<Graph> filtered_enumeration(int n, std::span<const Predicate> predicates,
                                        const EnumerationOptions& options = {});

}  // namespace cubicsym

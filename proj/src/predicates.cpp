#include <algorithm>
#include <optional>

#include "cubicsym/enumeration.hpp"
#include "cubicsym/search.hpp"
#include "cubicsym/symmetry.hpp"

namespace cubicsym {

namespace {

// Lower runs first; girth and cycle coverage are cheap, group work is not.
int cost_rank(const Predicate& p) {
  return std::visit(
      [](const auto& q) -> int {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, GirthIs>) return 0;
        if constexpr (std::is_same_v<T, EveryEdgeInGirthCycle>) return 1;
        if constexpr (std::is_same_v<T, Every3ArcIn6Cycle>) return 2;
        if constexpr (std::is_same_v<T, VertexTransitive>) return 3;
        if constexpr (std::is_same_v<T, EdgeOrbitsAre>) return 4;
        if constexpr (std::is_same_v<T, ArcTransitive>) return 5;
        return 6;
      },
      p);
}

class Evaluator {
 public:
  explicit Evaluator(const Graph& g) : g_(g) {}

  bool operator()(const GirthIs& p) { return girth_value() == p.g; }
  bool operator()(const VertexTransitive&) {
    return g_.order() > 0 && orbits(aut(), Action::vertices(), g_).blocks.size() == 1;
  }
  bool operator()(const ArcTransitive&) {
    return g_.size() > 0 && orbits(aut(), Action::arcs(), g_).blocks.size() == 1;
  }
  bool operator()(const HasConsistentGirthCycle&) {
    return girth_value() > 0 && is_connected(g_) && has_consistent_cycle(g_, girth_value());
  }
  bool operator()(const EveryEdgeInGirthCycle&) {
    return girth_value() > 0 && cycle_coverage(g_, EveryEdgeInCycle{girth_value()});
  }
  bool operator()(const Every3ArcIn6Cycle&) { return cycle_coverage(g_, Every3ArcInCycle{6}); }
  bool operator()(const EdgeOrbitsAre& p) {
    return static_cast<int>(orbits(aut(), Action::edges(), g_).blocks.size()) == p.t;
  }

 private:
  int girth_value() {
    if (!girth_) {
      auto r = girth(g_);
      girth_ = r.acyclic() ? 0 : r.length();
    }
    return *girth_;
  }
  const PermutationGroup& aut() {
    if (!aut_) aut_ = automorphism_group(g_);
    return *aut_;
  }

  const Graph& g_;
  std::optional<int> girth_;
  std::optional<PermutationGroup> aut_;
};

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw UnknownPredicate("bad number in predicate '" + std::string(whole) + "'");
    value = value * 10 + (c - '0');
  }
  if (text.empty()) throw UnknownPredicate("missing number in predicate '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Predicate parse_predicate(std::string_view text) {
  if (text.starts_with("girth=")) return GirthIs{parse_int(text.substr(6), text)};
  if (text.starts_with("edge-orbits=")) return EdgeOrbitsAre{parse_int(text.substr(12), text)};
  if (text == "vertex-transitive") return VertexTransitive{};
  if (text == "arc-transitive") return ArcTransitive{};
  if (text == "consistent-girth-cycle") return HasConsistentGirthCycle{};
  if (text == "every-edge-in-girth-cycle") return EveryEdgeInGirthCycle{};
  if (text == "every-3-arc-in-6-cycle") return Every3ArcIn6Cycle{};
  throw UnknownPredicate("unknown predicate '" + std::string(text) + "'");
}

std::string to_string(const Predicate& p) {
  return std::visit(
      [](const auto& q) -> std::string {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, GirthIs>) return "girth=" + std::to_string(q.g);
        if constexpr (std::is_same_v<T, EdgeOrbitsAre>) return "edge-orbits=" + std::to_string(q.t);
        if constexpr (std::is_same_v<T, VertexTransitive>) return "vertex-transitive";
        if constexpr (std::is_same_v<T, ArcTransitive>) return "arc-transitive";
        if constexpr (std::is_same_v<T, HasConsistentGirthCycle>) return "consistent-girth-cycle";
        if constexpr (std::is_same_v<T, EveryEdgeInGirthCycle>) return "every-edge-in-girth-cycle";
        return "every-3-arc-in-6-cycle";
      },
      p);
}

bool satisfies_all(const Graph& g, std::span<const Predicate> predicates) {
  std::vector<Predicate> ordered(predicates.begin(), predicates.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Predicate& a, const Predicate& b) { return cost_rank(a) < cost_rank(b); });
  Evaluator eval(g);
  for (const auto& p : ordered)
    if (!std::visit(eval, p)) return false;
  return true;
}

std::vector<Graph> filtered_enumeration(int n, std::span<const Predicate> predicates,
                                        const EnumerationOptions& options) {
  EnumerationOptions opts = options;
  for (const auto& p : predicates)
    if (auto* gp = std::get_if<GirthIs>(&p)) opts.min_girth = std::max(opts.min_girth, gp->g);
  std::vector<Predicate> preds(predicates.begin(), predicates.end());
  std::vector<Graph> out;
  enumerate_cubic(
      n, opts, [&](const Graph& g) { return satisfies_all(g, preds); }, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace cubicsym

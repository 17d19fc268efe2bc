#include "cubicsym/distinguishing.hpp"

#include <algorithm>

#include "cubicsym/search.hpp"

namespace cubicsym {

namespace {

void validate_set(const VertexSet& s, int n) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n) throw std::out_of_range("vertex set member outside the graph");
    if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument("vertex set must be ascending and distinct");
  }
}

// Advances `c` to the next k-combination of `pool` indices in lex order.
bool next_combination(std::vector<int>& c, int pool) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == pool - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

class CostSearch {
 public:
  CostSearch(const Graph& g, std::optional<std::uint64_t> budget) : g_(g), budget_(budget) {}

  bool test(const VertexSet& s) {
    if (budget_ && tested_ >= *budget_) throw BudgetExhausted(exhausted_, tested_);
    ++tested_;
    return is_distinguishing_set(g_, s);
  }

  // Some distinguishing k-set containing a representative exists?
  bool exists(int k, const std::vector<Vertex>& reps) {
    const int n = g_.order();
    for (Vertex r : reps) {
      std::vector<Vertex> others;
      for (Vertex v = 0; v < n; ++v)
        if (v != r) others.push_back(v);
      std::vector<int> c(static_cast<std::size_t>(k - 1));
      for (int i = 0; i < k - 1; ++i) c[i] = i;
      do {
        VertexSet s{r};
        for (int i : c) s.push_back(others[i]);
        std::sort(s.begin(), s.end());
        if (test(s)) return true;
      } while (next_combination(c, n - 1));
    }
    return false;
  }

  VertexSet least(int k) {
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[i] = i;
    do {
      VertexSet s(c.begin(), c.end());
      if (test(s)) return s;
    } while (next_combination(c, g_.order()));
    throw std::logic_error("distinguishing set vanished on rescan");
  }

  void mark_exhausted(int k) { exhausted_ = k; }

 private:
  const Graph& g_;
  std::optional<std::uint64_t> budget_;
  std::uint64_t tested_ = 0;
  int exhausted_ = 0;
};

bool preserved_by_some(std::span<const Permutation> elements, const std::vector<int>& color) {
  for (const auto& p : elements) {
    if (p.is_identity()) continue;
    bool preserves = true;
    for (std::size_t v = 0; v < color.size() && preserves; ++v) preserves = color[p(static_cast<Vertex>(v))] == color[v];
    if (preserves) return true;
  }
  return false;
}

// Colorings with colors introduced in increasing order, so each partition of
// the vertices into at most d classes is visited once.
bool coloring_exists(std::span<const Permutation> elements, std::vector<int>& color, int v, int used, int d) {
  const int n = static_cast<int>(color.size());
  if (v == n) return !preserved_by_some(elements, color);
  for (int c = 0; c <= std::min(used, d - 1); ++c) {
    color[v] = c;
    if (coloring_exists(elements, color, v + 1, std::max(used, c + 1), d)) return true;
  }
  return false;
}

}  // namespace

bool is_distinguishing_set(const Graph& g, const VertexSet& s) {
  validate_set(s, g.order());
  VertexColoring coloring(static_cast<std::size_t>(g.order()), 0);
  if (!s.empty() && static_cast<int>(s.size()) < g.order())
    for (Vertex v : s) coloring[v] = 1;
  SearchOptions opts;
  opts.coloring = &coloring;
  return run_search(g, opts).generators.empty();
}

bool is_distinguishing_set(const PermutationGroup& aut, const VertexSet& s) {
  validate_set(s, aut.degree());
  return stabilizer(aut, s, StabilizerMode::SetwiseSet).order() == 1;
}

CostResult distinguishing_cost(const Graph& g, std::optional<std::uint64_t> budget) {
  auto result = run_search(g, {});
  if (result.generators.empty()) return Asymmetric{};

  std::vector<Vertex> reps;
  for (Vertex v = 0; v < g.order(); ++v)
    if (result.orbit_label[v] == v) reps.push_back(v);

  CostSearch search(g, budget);
  for (int k = 1; k <= g.order() / 2; ++k) {
    if (search.exists(k, reps)) return Cost{k, search.least(k)};
    search.mark_exhausted(k);
  }
  return NotTwoDistinguishable{};
}

int distinguishing_number(const Graph& g, int color_cap) {
  auto cost = distinguishing_cost(g);
  int d = std::holds_alternative<Asymmetric>(cost) ? 1 : std::holds_alternative<Cost>(cost) ? 2 : 0;
  if (d == 0) {
    auto aut = automorphism_group(g);
    std::vector<int> color(static_cast<std::size_t>(g.order()), 0);
    for (int k = 3; k <= color_cap && d == 0; ++k)
      if (coloring_exists(aut.elements(), color, 0, 0, k)) d = k;
    if (d == 0) throw ColorCapExceeded(color_cap);
  }
  if (d > color_cap) throw ColorCapExceeded(color_cap);
  return d;
}

}  // namespace cubicsym

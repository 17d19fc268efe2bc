#include <algorithm>
#include <limits>
#include <map>
#include <random>

#include "cubicsym/constructions.hpp"

namespace cubicsym {

namespace {

// Uniform draw in [0, bound) by rejection; std::uniform_int_distribution is
// not specified bit-for-bit across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

std::size_t neighbor_index(const Graph& g, Vertex u, Vertex w) {
  auto row = g.neighbors(u);
  auto it = std::lower_bound(row.begin(), row.end(), w);
  if (it == row.end() || *it != w)
    throw PreconditionError("(" + std::to_string(u) + ", " + std::to_string(w) + ") is not an arc");
  return static_cast<std::size_t>(it - row.begin());
}

}  // namespace

ArcLabeling::ArcLabeling(const Graph& host, std::vector<std::vector<int>> labels) : labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) != host.order()) throw PreconditionError("labeling size differs from order");
  for (Vertex u = 0; u < host.order(); ++u) {
    auto sorted = labels_[u];
    std::sort(sorted.begin(), sorted.end());
    bool ok = static_cast<int>(sorted.size()) == host.degree(u);
    for (std::size_t i = 0; ok && i < sorted.size(); ++i) ok = sorted[i] == static_cast<int>(i) + 1;
    if (!ok) throw PreconditionError("labels at vertex " + std::to_string(u) + " are not a bijection onto 1..deg");
  }
}

int ArcLabeling::label(const Graph& host, Vertex u, Vertex w) const { return labels_[u][neighbor_index(host, u, w)]; }

ArcLabeling neighborhood_labeling(const Graph& g, const LabelingStrategy& strategy) {
  const int n = g.order();
  std::vector<std::vector<int>> labels(n);
  if (std::holds_alternative<AdjacencyOrder>(strategy)) {
    for (Vertex u = 0; u < n; ++u)
      for (int i = 0; i < g.degree(u); ++i) labels[u].push_back(i + 1);
  } else if (auto* rot = std::get_if<FromRotation>(&strategy)) {
    const auto& order = rot->rotation.order;
    if (static_cast<int>(order.size()) != n) throw PreconditionError("rotation system size differs from order");
    for (Vertex u = 0; u < n; ++u) {
      if (static_cast<int>(order[u].size()) != g.degree(u))
        throw PreconditionError("rotation at vertex " + std::to_string(u) + " does not list its neighbors");
      labels[u].assign(g.degree(u), 0);
      for (std::size_t i = 0; i < order[u].size(); ++i) {
        const Vertex w = order[u][i];
        if (w < 0 || w >= n || !g.adjacent(u, w))
          throw PreconditionError("rotation at vertex " + std::to_string(u) + " names a non-neighbor");
        labels[u][neighbor_index(g, u, w)] = static_cast<int>(i) + 1;
      }
    }
  } else {
    std::mt19937_64 rng(std::get<Seeded>(strategy).seed);
    for (Vertex u = 0; u < n; ++u) {
      auto& row = labels[u];
      for (int i = 0; i < g.degree(u); ++i) row.push_back(i + 1);
      for (std::size_t i = row.size(); i > 1; --i) std::swap(row[i - 1], row[bounded(rng, i)]);
    }
  }
  return ArcLabeling(g, std::move(labels));
}

Graph generalized_truncation(const Graph& lambda, const ArcLabeling& rho, const Graph& y) {
  const int k = y.order();
  if (!lambda.is_regular(k)) throw PreconditionError("truncation needs a k-regular graph with k = |V(Y)|");
  if (static_cast<int>(rho.labels().size()) != lambda.order()) throw PreconditionError("labeling is for another graph");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < lambda.order(); ++u) {
    for (auto [i, j] : y.edges()) edges.emplace_back(u * k + i, u * k + j);
    for (Vertex w : lambda.neighbors(u))
      if (u < w) edges.emplace_back(u * k + rho.label(lambda, u, w) - 1, w * k + rho.label(lambda, w, u) - 1);
  }
  return build_graph(lambda.order() * k, edges);
}

Graph classic_truncation(const Graph& g, const LabelingStrategy& strategy) {
  if (!g.is_cubic()) throw PreconditionError("classic truncation needs a cubic graph");
  return generalized_truncation(g, neighborhood_labeling(g, strategy), cycle_graph(3));
}

Graph cycle_quotient(const Graph& g, const EdgeOrbitSummary& summary) {
  const EdgeOrbit* cycles = nullptr;
  for (const auto& o : summary.orbits)
    if (auto* dc = std::get_if<DisjointCycles>(&o.shape)) {
      int covered = 0;
      for (int len : dc->lengths) covered += len;
      if (covered == g.order()) {
        cycles = &o;
        break;
      }
    }
  if (!cycles) throw QuotientError("no edge orbit partitions the vertices into cycles");

  // Component id per vertex, numbered by least member.
  std::vector<std::vector<Vertex>> adj(g.order());
  for (auto [u, v] : cycles->edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> comp(g.order(), -1);
  int count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adj[x])
        if (comp[y] < 0) {
          comp[y] = count;
          stack.push_back(y);
        }
    }
    ++count;
  }

  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (std::binary_search(cycles->edges.begin(), cycles->edges.end(), Edge{u, v})) continue;
    const int a = comp[u], b = comp[v];
    if (a == b) throw QuotientError("quotient would have a loop at cycle " + std::to_string(a));
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw QuotientError("quotient is not simple: cycles " + std::to_string(dup->first) + " and " +
                        std::to_string(dup->second) + " are joined twice");
  return build_graph(count, edges);
}

}  // namespace cubicsym

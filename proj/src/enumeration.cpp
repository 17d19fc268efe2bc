#include "cubicsym/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

#include "cubicsym/search.hpp"

namespace cubicsym {

// Generation by canonical augmentation: a connected graph of maximum degree
// three grows one vertex at a time. A child is kept only when its new vertex
// lies in the orbit of the child's canonical deletion vertex, and the new
// vertex's neighborhoods are tried once per orbit of the parent's group.
// Intermediate graphs are pruned unless they could still be an induced
// subgraph of a connected cubic graph on n vertices.

namespace {

struct Node {
  int k = 0;
  std::vector<std::array<Vertex, 3>> adj;
  std::vector<int> deg;
  std::optional<std::vector<Permutation>> gens;  // Aut(node) when already known

  Graph graph() const {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < k; ++u)
      for (int i = 0; i < deg[u]; ++i)
        if (u < adj[u][i]) edges.emplace_back(u, adj[u][i]);
    return build_graph(k, edges);
  }
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<char> cut_vertices(const Node& g) {
  const int n = g.k;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> cut(n, 0);
  int timer = 0;
  auto dfs = [&](auto&& self, Vertex u, Vertex parent) -> void {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int i = 0; i < g.deg[u]; ++i) {
      Vertex w = g.adj[u][i];
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[u] = std::min(low[u], disc[w]);
      } else {
        ++children;
        self(self, w, u);
        low[u] = std::min(low[u], low[w]);
        if (parent >= 0 && low[w] >= disc[u]) cut[u] = 1;
      }
    }
    if (parent < 0 && children > 1) cut[u] = 1;
  };
  dfs(dfs, 0, -1);
  return cut;
}

// (degree, neighbor degree sum, vertices at distance exactly two), packed.
int deletion_invariant(const Node& g, Vertex v, std::vector<int>& mark, int stamp) {
  int nsum = 0;
  mark[v] = stamp;
  for (int i = 0; i < g.deg[v]; ++i) mark[g.adj[v][i]] = stamp;
  int dist2 = 0;
  for (int i = 0; i < g.deg[v]; ++i) {
    Vertex w = g.adj[v][i];
    nsum += g.deg[w];
    for (int j = 0; j < g.deg[w]; ++j) {
      Vertex x = g.adj[w][j];
      if (mark[x] != stamp) {
        mark[x] = stamp;
        ++dist2;
      }
    }
  }
  return g.deg[v] * 10000 + nsum * 100 + dist2;
}

class Generator {
 public:
  Generator(int n, int min_girth) : n_(n), min_girth_(min_girth) {}

  Node root() const {
    Node r;
    r.k = 1;
    r.adj.resize(1);
    r.deg.assign(1, 0);
    r.gens = std::vector<Permutation>{};
    return r;
  }

  /// Accepted children of p, in deterministic order.
  std::vector<Node> children(Node& p) const {
    if (!p.gens) p.gens = run_search(p.graph(), {}).generators;
    const int k = p.k;

    std::vector<Vertex> open;
    for (Vertex v = 0; v < k; ++v)
      if (p.deg[v] < 3) open.push_back(v);

    std::vector<std::vector<Vertex>> subsets;
    const int m = static_cast<int>(open.size());
    for (int a = 0; a < m; ++a) {
      subsets.push_back({open[a]});
      for (int b = a + 1; b < m; ++b) {
        subsets.push_back({open[a], open[b]});
        for (int c = b + 1; c < m; ++c) subsets.push_back({open[a], open[b], open[c]});
      }
    }
    std::vector<std::vector<Vertex>> valid;
    for (auto& s : subsets)
      if (feasible(p, s)) valid.push_back(std::move(s));
    if (valid.empty()) return {};

    // One neighborhood per orbit of Aut(p) on the feasible sets.
    std::map<std::vector<Vertex>, std::size_t> index;
    for (std::size_t i = 0; i < valid.size(); ++i) index.emplace(valid[i], i);
    UnionFind uf(valid.size());
    std::vector<Vertex> image;
    for (const auto& g : *p.gens)
      for (std::size_t i = 0; i < valid.size(); ++i) {
        image.clear();
        for (Vertex v : valid[i]) image.push_back(g(v));
        std::sort(image.begin(), image.end());
        uf.unite(i, index.at(image));
      }

    std::vector<Node> out;
    for (std::size_t i = 0; i < valid.size(); ++i) {
      if (uf.find(i) != i) continue;
      Node c = extend(p, valid[i]);
      if (accept(c)) out.push_back(std::move(c));
    }
    return out;
  }

 private:
  bool feasible(const Node& p, const std::vector<Vertex>& s) const {
    const int k = p.k + 1;
    const int r = n_ - k;
    int deficiency = 3 - static_cast<int>(s.size());
    if (deficiency > r) return false;
    for (Vertex v = 0; v < p.k; ++v) {
      int d = 3 - p.deg[v] - static_cast<int>(std::binary_search(s.begin(), s.end(), v));
      if (d > r) return false;
      deficiency += d;
    }
    if (min_girth_ > 3 && s.size() > 1 && !far_apart(p, s, min_girth_ - 2)) return false;
    if (r == 0) return deficiency == 0;
    if (deficiency < 1 || deficiency > 3 * r || (3 * r - deficiency) % 2 != 0) return false;
    if (deficiency < 3 * r - r * (r - 1)) return false;
    return deficiency >= r * std::max(0, 4 - r);
  }

  // Every pair in s at distance >= d.
  static bool far_apart(const Node& p, const std::vector<Vertex>& s, int d) {
    std::vector<int> dist(p.k, -1);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      std::fill(dist.begin(), dist.end(), -1);
      std::vector<Vertex> frontier{s[i]};
      dist[s[i]] = 0;
      for (int depth = 1; depth < d && !frontier.empty(); ++depth) {
        std::vector<Vertex> next;
        for (Vertex x : frontier)
          for (int j = 0; j < p.deg[x]; ++j) {
            Vertex y = p.adj[x][j];
            if (dist[y] < 0) {
              dist[y] = depth;
              next.push_back(y);
            }
          }
        frontier.swap(next);
      }
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (dist[s[j]] >= 0) return false;
    }
    return true;
  }

  static Node extend(const Node& p, const std::vector<Vertex>& s) {
    Node c;
    c.k = p.k + 1;
    c.adj = p.adj;
    c.deg = p.deg;
    c.adj.push_back({});
    c.deg.push_back(0);
    const Vertex x = p.k;
    for (Vertex v : s) {
      c.adj[v][c.deg[v]++] = x;
      c.adj[x][c.deg[x]++] = v;
    }
    return c;
  }

  bool accept(Node& c) const {
    const Vertex x = c.k - 1;
    auto cut = cut_vertices(c);
    if (cut[x]) return false;
    std::vector<int> mark(c.k, -1), f(c.k, 0);
    int best = INT32_MAX;
    for (Vertex v = 0; v < c.k; ++v) {
      f[v] = deletion_invariant(c, v, mark, v);
      if (!cut[v]) best = std::min(best, f[v]);
    }
    if (f[x] != best) return false;
    int candidates = 0;
    for (Vertex v = 0; v < c.k; ++v) candidates += !cut[v] && f[v] == best;
    if (candidates == 1) return true;

    // Colors: candidates first, then everything else by (cut, invariant).
    std::vector<long> key(c.k);
    for (Vertex v = 0; v < c.k; ++v) key[v] = (!cut[v] && f[v] == best) ? -1 : (cut[v] ? 1L << 40 : 0) + f[v];
    std::vector<long> distinct(key);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    VertexColoring colors(c.k);
    for (Vertex v = 0; v < c.k; ++v)
      colors[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), key[v]) - distinct.begin());

    SearchOptions opts;
    opts.canonical = true;
    opts.coloring = &colors;
    auto result = run_search(c.graph(), opts);
    Vertex chosen = -1;
    for (Vertex v = 0; v < c.k; ++v)
      if (colors[v] == 0 && (chosen < 0 || result.canonical_position[v] < result.canonical_position[chosen]))
        chosen = v;
    if (result.orbit_label[x] != result.orbit_label[chosen]) return false;
    c.gens = std::move(result.generators);
    return true;
  }

  int n_;
  int min_girth_;
};

void collect(const Generator& gen, Node& node, int target_level, std::vector<Node>& out) {
  if (node.k == target_level) {
    out.push_back(std::move(node));
    return;
  }
  for (auto& c : gen.children(node)) collect(gen, c, target_level, out);
}

void finish(const Generator& gen, Node& node, int n, const GraphFilter& filter, std::vector<Graph>& out) {
  if (node.k == n) {
    Graph g = canonical_graph(node.graph());
    if (!filter || filter(g)) out.push_back(std::move(g));
    return;
  }
  for (auto& c : gen.children(node)) finish(gen, c, n, filter, out);
}

}  // namespace

void enumerate_cubic(int n, const EnumerationOptions& options, const GraphFilter& filter, const GraphSink& sink) {
  if (n % 2 != 0) throw std::invalid_argument("cubic graphs need an even order, got " + std::to_string(n));
  if (n < 4 || n > kMaxEnumerationOrder)
    throw std::out_of_range("enumeration order must lie in [4, " + std::to_string(kMaxEnumerationOrder) + "]");
  if (options.parts < 1 || options.part < 0 || options.part >= options.parts)
    throw std::invalid_argument("part must lie in [0, parts)");
  const int jobs = std::max(1, options.jobs);

  Generator gen(n, options.min_girth);
  const int split = std::max(2, n / 2 + 1);
  std::vector<Node> roots;
  Node root = gen.root();
  collect(gen, root, split, roots);

  std::vector<std::size_t> mine;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (static_cast<int>(i % options.parts) == options.part) mine.push_back(i);

  if (jobs == 1) {
    for (std::size_t i : mine) {
      std::vector<Graph> out;
      finish(gen, roots[i], n, filter, out);
      for (const auto& g : out) sink(g);
    }
    return;
  }

  // Workers take subtrees in order; the caller drains results in the same order.
  std::vector<std::optional<std::vector<Graph>>> results(mine.size());
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable ready;
  std::exception_ptr failure;
  auto work = [&] {
    for (;;) {
      const std::size_t slot = next.fetch_add(1);
      if (slot >= mine.size()) return;
      std::vector<Graph> out;
      try {
        finish(gen, roots[mine[slot]], n, filter, out);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
      std::lock_guard lock(mu);
      results[slot] = std::move(out);
      ready.notify_all();
    }
  };
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t) threads.emplace_back(work);
  for (std::size_t slot = 0; slot < mine.size(); ++slot) {
    std::vector<Graph> out;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return results[slot].has_value(); });
      out = std::move(*results[slot]);
      results[slot].reset();
      if (failure) break;
    }
    for (const auto& g : out) sink(g);
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<Graph> enumerate_cubic(int n, const EnumerationOptions& options) {
  std::vector<Graph> out;
  enumerate_cubic(n, options, nullptr, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace cubicsym

#include "cubicsym/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace cubicsym {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  std::vector<std::vector<Vertex>> rows(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge " + pair_text(u, v) + " has an endpoint outside [0, " +
                       std::to_string(n) + ")");
    if (u == v) throw GraphError("loop edge " + pair_text(u, v));
    rows[u].push_back(v);
    rows[v].push_back(u);
  }
  Graph g;
  g.n_ = n;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.adj_.reserve(2 * edges.size());
  for (Vertex v = 0; v < n; ++v) {
    auto& row = rows[v];
    std::sort(row.begin(), row.end());
    auto dup = std::adjacent_find(row.begin(), row.end());
    if (dup != row.end()) throw GraphError("duplicate edge " + pair_text(std::min(v, *dup), std::max(v, *dup)));
    g.adj_.insert(g.adj_.end(), row.begin(), row.end());
    g.offsets_[v + 1] = static_cast<int>(g.adj_.size());
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_regular(int k) const {
  for (Vertex v = 0; v < n_; ++v)
    if (degree(v) != k) return false;
  return true;
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return Graph::from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

Graph relabel(const Graph& g, std::span<const Vertex> relabel) {
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (auto [u, v] : g.edges()) edges.emplace_back(relabel[u], relabel[v]);
  return Graph::from_edges(g.order(), edges);
}

// ---------------------------------------------------------------------------

CycleSeq CycleSeq::from_traversal(std::vector<Vertex> walk) {
  CycleSeq c;
  const std::size_t len = walk.size();
  if (len == 0) return c;
  auto start = std::min_element(walk.begin(), walk.end()) - walk.begin();
  const std::size_t s = static_cast<std::size_t>(start);
  const Vertex after = walk[(s + 1) % len];
  const Vertex before = walk[(s + len - 1) % len];
  c.vertices_.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t idx = after <= before ? (s + i) % len : (s + len - i) % len;
    c.vertices_.push_back(walk[idx]);
  }
  return c;
}

int GirthResult::length() const {
  if (acyclic()) throw std::logic_error("acyclic graph has no finite girth");
  return std::get<int>(girth);
}

GirthResult girth(const Graph& g) {
  const int n = g.order();
  int best = -1;
  std::vector<Vertex> best_cycle;
  std::vector<int> dist(n), parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      if (best > 0 && 2 * dist[x] + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (y != parent[x]) {
          int len = dist[x] + dist[y] + 1;
          if (best < 0 || len < best) {
            // Paths root..x and root..y; at the global minimum they meet only
            // at the root.
            std::vector<Vertex> left, right;
            for (Vertex a = x; a != -1; a = parent[a]) left.push_back(a);
            for (Vertex b = y; b != -1; b = parent[b]) right.push_back(b);
            std::vector<Vertex> cyc(left.rbegin(), left.rend());
            for (std::size_t i = 0; i + 1 < right.size(); ++i) cyc.push_back(right[i]);
            std::set<Vertex> distinct(cyc.begin(), cyc.end());
            if (distinct.size() == cyc.size()) {
              best = len;
              best_cycle = std::move(cyc);
            }
          }
        }
      }
    }
    if (best == 3) break;
  }
  GirthResult r;
  if (best < 0) {
    r.girth = Acyclic{};
  } else {
    r.girth = best;
    r.witness = CycleSeq::from_traversal(best_cycle);
  }
  return r;
}

std::vector<CycleSeq> cycles_of_length(const Graph& g, int length) {
  if (length < 3) throw PreconditionError("cycle length must be at least 3");
  const int n = g.order();
  std::vector<CycleSeq> out;
  std::vector<int> dist(n);
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  path.reserve(length);

  for (Vertex s = 0; s < n; ++s) {
    // Distances back to s inside the subgraph on vertices >= s; the DFS below
    // only visits that subgraph because s is the least vertex of the cycle.
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      if (dist[x] >= length / 2) continue;
      for (Vertex y : g.neighbors(x))
        if (y > s && dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
    }

    path.assign(1, s);
    on_path[s] = 1;
    auto dfs = [&](auto&& self, Vertex x) -> void {
      const int depth = static_cast<int>(path.size());  // vertices on path
      if (depth == length) {
        if (g.adjacent(x, s) && path[1] < path.back()) {
          out.push_back(CycleSeq::from_traversal(path));
        }
        return;
      }
      for (Vertex y : g.neighbors(x)) {
        if (y <= s || on_path[y] || dist[y] < 0) continue;
        // y would sit at index `depth`; it still needs length - depth steps home.
        if (dist[y] > length - depth) continue;
        on_path[y] = 1;
        path.push_back(y);
        self(self, y);
        path.pop_back();
        on_path[y] = 0;
      }
    };
    dfs(dfs, s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t s_arc_count(const Graph& g, int s) {
  if (s < 1) throw PreconditionError("s-arc length must be positive");
  const int n = g.order();
  // ways[v][j]: number of t-arcs ending with the arc (neighbors(v)[j] -> v).
  std::vector<int> offset(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degree(v);
  std::vector<std::uint64_t> ways(offset[n], 1), next(offset[n]);
  auto slot = [&](Vertex tail, Vertex head) {
    auto row = g.neighbors(head);
    return offset[head] + static_cast<int>(std::lower_bound(row.begin(), row.end(), tail) - row.begin());
  };
  for (int t = 1; t < s; ++t) {
    std::fill(next.begin(), next.end(), 0);
    for (Vertex v = 0; v < n; ++v) {
      auto row = g.neighbors(v);
      for (std::size_t j = 0; j < row.size(); ++j) {
        const Vertex prev = row[j];
        for (Vertex w : row)
          if (w != prev) next[slot(v, w)] += ways[offset[v] + j];
      }
    }
    ways.swap(next);
  }
  std::uint64_t total = 0;
  for (auto w : ways) total += w;
  return total;
}

std::vector<ArcSeq> s_arcs(const Graph& g, int s) {
  if (s < 1) throw PreconditionError("s-arc length must be positive");
  std::vector<ArcSeq> out;
  ArcSeq arc;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(arc.size()) == s + 1) {
      out.push_back(arc);
      return;
    }
    const Vertex last = arc.back();
    const Vertex back = arc.size() >= 2 ? arc[arc.size() - 2] : -1;
    for (Vertex w : g.neighbors(last)) {
      if (w == back) continue;
      arc.push_back(w);
      self(self);
      arc.pop_back();
    }
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    arc.assign(1, v);
    extend(extend);
  }
  return out;
}

bool cycle_coverage(const Graph& g, CoverageMode mode) {
  if (const auto* edge_mode = std::get_if<EveryEdgeInCycle>(&mode)) {
    if (g.size() == 0) return true;
    if (edge_mode->length < 3) return false;
    std::set<Edge> covered;
    for (const auto& c : cycles_of_length(g, edge_mode->length)) {
      const std::size_t len = c.length();
      for (std::size_t i = 0; i < len; ++i) {
        Vertex a = c[i], b = c[(i + 1) % len];
        covered.emplace(std::min(a, b), std::max(a, b));
      }
    }
    return covered.size() == g.size();
  }
  const int length = std::get<Every3ArcInCycle>(mode).length;
  const auto arcs = s_arcs(g, 3);
  if (arcs.empty()) return true;
  if (length < 4) return false;
  std::set<ArcSeq> covered;
  for (const auto& c : cycles_of_length(g, length)) {
    const std::size_t len = c.length();
    for (std::size_t i = 0; i < len; ++i) {
      ArcSeq fwd{c[i], c[(i + 1) % len], c[(i + 2) % len], c[(i + 3) % len]};
      ArcSeq rev(fwd.rbegin(), fwd.rend());
      covered.insert(std::move(fwd));
      covered.insert(std::move(rev));
    }
  }
  return std::all_of(arcs.begin(), arcs.end(), [&](const ArcSeq& a) { return covered.count(a) > 0; });
}

}  // namespace cubicsym

#include "cubicsym/search.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <numeric>

#include "cubicsym/io.hpp"

namespace cubicsym {

namespace {

// Ordered partition stored nauty-style: `lab` lists vertices by position and
// each cell occupies a contiguous range of positions.
struct Cells {
  std::vector<Vertex> lab;  // position -> vertex
  std::vector<int> pos;     // vertex -> position
  std::vector<int> start;   // position -> first position of its cell
  std::vector<int> len;     // cell length, meaningful at cell starts
  int ncells = 0;

  int size() const { return static_cast<int>(lab.size()); }
  bool discrete() const { return ncells == size(); }
};

void validate_coloring(const VertexColoring& colors, int n) {
  if (static_cast<int>(colors.size()) != n)
    throw std::invalid_argument("coloring length " + std::to_string(colors.size()) + " does not match order " +
                                std::to_string(n));
  if (n == 0) return;
  const int top = *std::max_element(colors.begin(), colors.end());
  std::vector<char> used(static_cast<std::size_t>(std::max(top, 0)) + 1, 0);
  for (int c : colors) {
    if (c < 0) throw std::invalid_argument("negative color index");
    used[c] = 1;
  }
  if (std::find(used.begin(), used.end(), 0) != used.end())
    throw std::invalid_argument("color indices must form a contiguous range starting at 0");
}

Cells initial_cells(int n, const VertexColoring* coloring) {
  Cells c;
  c.lab.resize(n);
  c.pos.resize(n);
  c.start.resize(n);
  c.len.assign(n, 0);
  std::iota(c.lab.begin(), c.lab.end(), 0);
  if (coloring) {
    validate_coloring(*coloring, n);
    std::stable_sort(c.lab.begin(), c.lab.end(), [&](Vertex a, Vertex b) { return (*coloring)[a] < (*coloring)[b]; });
  }
  int cell = 0;
  for (int i = 0; i < n; ++i) {
    c.pos[c.lab[i]] = i;
    if (i > 0 && coloring && (*coloring)[c.lab[i]] != (*coloring)[c.lab[i - 1]]) cell = i;
    c.start[i] = cell;
    ++c.len[cell];
    if (cell == i) ++c.ncells;
  }
  return c;
}

std::vector<int> cell_starts(const Cells& c) {
  std::vector<int> starts;
  for (int i = 0; i < c.size(); i += c.len[i]) starts.push_back(i);
  return starts;
}

class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g), count_(g.order(), 0), touched_flag_(g.order(), 0), in_queue_(g.order(), 0) {}

  void run(Cells& c, std::span<const int> splitters) {
    const int n = c.size();
    for (int s : splitters) push(s);
    while (!queue_.empty() && c.ncells < n) {
      const int w = queue_.front();
      queue_.pop_front();
      in_queue_[w] = 0;

      touched_.clear();
      const int wlen = c.len[w];
      for (int i = w; i < w + wlen; ++i) {
        for (Vertex x : g_.neighbors(c.lab[i])) {
          if (count_[x]++ == 0) {
            const int cs = c.start[c.pos[x]];
            if (!touched_flag_[cs]) {
              touched_flag_[cs] = 1;
              touched_.push_back(cs);
            }
          }
        }
      }
      std::sort(touched_.begin(), touched_.end());
      for (int cs : touched_) {
        touched_flag_[cs] = 0;
        split(c, cs);
      }
    }
    while (!queue_.empty()) {
      in_queue_[queue_.front()] = 0;
      queue_.pop_front();
    }
  }

 private:
  void push(int s) {
    if (!in_queue_[s]) {
      in_queue_[s] = 1;
      queue_.push_back(s);
    }
  }

  void split(Cells& c, int cs) {
    const int len = c.len[cs];
    auto first = c.lab.begin() + cs;
    auto last = first + len;
    bool uniform = true;
    const int k0 = count_[*first];
    for (auto it = first; it != last; ++it)
      if (count_[*it] != k0) {
        uniform = false;
        break;
      }
    if (!uniform) {
      std::stable_sort(first, last, [&](Vertex a, Vertex b) { return count_[a] < count_[b]; });
      const bool parent_queued = in_queue_[cs] != 0;
      int frag = cs;
      for (int i = cs; i <= cs + len; ++i) {
        if (i == cs + len || (i > cs && count_[c.lab[i]] != count_[c.lab[i - 1]])) {
          c.len[frag] = i - frag;
          for (int p = frag; p < i; ++p) c.start[p] = frag;
          if (frag != cs) ++c.ncells;
          if (!(parent_queued && frag == cs)) push(frag);
          frag = i;
        }
      }
      for (int i = cs; i < cs + len; ++i) c.pos[c.lab[i]] = i;
    }
    for (auto it = first; it != last; ++it) count_[*it] = 0;
  }

  const Graph& g_;
  std::vector<int> count_;
  std::vector<char> touched_flag_;
  std::vector<int> touched_;
  std::vector<char> in_queue_;
  std::deque<int> queue_;
};

void refine_all(Refiner& ref, Cells& c) {
  auto starts = cell_starts(c);
  ref.run(c, starts);
}

/// Splits v off the front of its cell; returns the new singleton's start.
int individualize(Cells& c, Vertex v) {
  const int cs = c.start[c.pos[v]];
  const int len = c.len[cs];
  const int p = c.pos[v];
  std::swap(c.lab[cs], c.lab[p]);
  c.pos[c.lab[p]] = p;
  c.pos[v] = cs;
  c.len[cs] = 1;
  c.len[cs + 1] = len - 1;
  for (int i = cs + 1; i < cs + len; ++i) c.start[i] = cs + 1;
  ++c.ncells;
  return cs;
}

int target_cell(const Cells& c) {
  int best = -1;
  for (int i = 0; i < c.size(); i += c.len[i])
    if (c.len[i] > 1 && (best < 0 || c.len[i] < c.len[best])) best = i;
  return best;
}

bool same_shape(const Cells& a, const Cells& b) {
  if (a.ncells != b.ncells) return false;
  for (int i = 0; i < a.size(); i += a.len[i])
    if (b.start[i] != i || b.len[i] != a.len[i]) return false;
  return true;
}

std::vector<std::uint32_t> leaf_key(const Graph& g, const Cells& c) {
  std::vector<std::uint32_t> key;
  key.reserve(g.size());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u)) {
      if (u > v) continue;
      auto a = static_cast<std::uint32_t>(c.pos[u]);
      auto b = static_cast<std::uint32_t>(c.pos[v]);
      if (a > b) std::swap(a, b);
      key.push_back(b * (b - 1) / 2 + a);
    }
  std::sort(key.begin(), key.end());
  return key;
}

std::vector<int> shape_signature(const Cells& c) {
  std::vector<int> sig;
  for (int i = 0; i < c.size(); i += c.len[i]) sig.push_back(c.len[i]);
  return sig;
}

// Individualization-refinement search. Leaves whose relabeled edge sets agree
// yield automorphisms. A leaf matching the first leaf lets the search return
// straight to the level where its path left the first path; siblings in one
// orbit of the automorphisms found so far (those fixing the current prefix)
// are skipped.
class Searcher {
 public:
  Searcher(const Graph& g, bool canonical) : g_(g), canonical_(canonical), refiner_(g) {}

  SearchResult run(const VertexColoring* coloring) {
    const int n = g_.order();
    Cells c = initial_cells(n, coloring);
    refine_all(refiner_, c);
    std::vector<Vertex> prefix;
    if (n > 0) node(c, prefix);

    SearchResult r;
    r.generators = std::move(gens_);
    r.orbit_label = vertex_orbit_labels(n, r.generators);
    r.leaves = leaves_;
    if (canonical_) {
      r.canonical_position.resize(n);
      for (int i = 0; i < n; ++i) r.canonical_position[best_lab_[i]] = i;
    }
    return r;
  }

 private:
  static constexpr int kContinue = INT_MAX;

  int node(Cells& c, std::vector<Vertex>& prefix) {
    const int level = static_cast<int>(prefix.size());
    if (c.discrete()) return leaf(c, prefix);

    if (!have_first_) {
      first_shapes_.push_back(shape_signature(c));
    } else if (!canonical_ && !on_first_path(prefix)) {
      // A leaf equivalent to the first one forces the same shape here.
      if (level < static_cast<int>(first_shapes_.size()) && shape_signature(c) != first_shapes_[level])
        return kContinue;
    }

    const int ts = target_cell(c);
    std::vector<Vertex> members(c.lab.begin() + ts, c.lab.begin() + ts + c.len[ts]);
    std::sort(members.begin(), members.end());

    std::vector<Vertex> explored;
    std::vector<Vertex> orbit;
    std::size_t orbit_gens = SIZE_MAX;
    for (Vertex v : members) {
      if (!explored.empty()) {
        if (orbit_gens != gens_.size()) {
          orbit = prefix_orbits(prefix);
          orbit_gens = gens_.size();
        }
        bool seen = std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return orbit[u] == orbit[v]; });
        if (seen) continue;
      }
      Cells child = c;
      const int s = individualize(child, v);
      refiner_.run(child, std::span<const int>(&s, 1));
      prefix.push_back(v);
      const int r = node(child, prefix);
      prefix.pop_back();
      explored.push_back(v);
      if (r < level) return r;
    }
    return kContinue;
  }

  int leaf(const Cells& c, const std::vector<Vertex>& prefix) {
    ++leaves_;
    auto key = leaf_key(g_, c);
    if (!have_first_) {
      have_first_ = true;
      first_key_ = key;
      first_lab_ = c.lab;
      first_path_ = prefix;
      best_key_ = std::move(key);
      best_lab_ = c.lab;
      return kContinue;
    }
    if (key == first_key_) {
      record(c, first_lab_);
      std::size_t d = 0;
      while (d < prefix.size() && d < first_path_.size() && prefix[d] == first_path_[d]) ++d;
      return static_cast<int>(d);
    }
    if (canonical_) {
      if (key == best_key_) {
        record(c, best_lab_);
      } else if (key > best_key_) {
        best_key_ = std::move(key);
        best_lab_ = c.lab;
      }
    }
    return kContinue;
  }

  void record(const Cells& c, const std::vector<Vertex>& other_lab) {
    std::vector<Vertex> images(c.lab.size());
    for (std::size_t v = 0; v < images.size(); ++v) images[v] = other_lab[c.pos[v]];
    Permutation p(std::move(images));
    if (!p.is_identity() && std::find(gens_.begin(), gens_.end(), p) == gens_.end()) gens_.push_back(std::move(p));
  }

  bool on_first_path(const std::vector<Vertex>& prefix) const {
    if (prefix.size() > first_path_.size()) return false;
    return std::equal(prefix.begin(), prefix.end(), first_path_.begin());
  }

  std::vector<Vertex> prefix_orbits(const std::vector<Vertex>& prefix) const {
    std::vector<Permutation> fixing;
    for (const auto& p : gens_)
      if (std::all_of(prefix.begin(), prefix.end(), [&](Vertex v) { return p(v) == v; })) fixing.push_back(p);
    return vertex_orbit_labels(g_.order(), fixing);
  }

  const Graph& g_;
  bool canonical_;
  Refiner refiner_;
  bool have_first_ = false;
  std::vector<std::uint32_t> first_key_, best_key_;
  std::vector<Vertex> first_lab_, best_lab_, first_path_;
  std::vector<std::vector<int>> first_shapes_;
  std::vector<Permutation> gens_;
  std::uint64_t leaves_ = 0;
};

// Depth-first search for an automorphism extending a partial map: the source
// side individualizes the least vertex of the target cell, the image side
// tries each vertex of the matching cell in ascending order.
class Extender {
 public:
  explicit Extender(const Graph& g) : g_(g), refiner_(g) {}

  std::optional<Permutation> run(std::span<const std::pair<Vertex, Vertex>> partial) {
    const int n = g_.order();
    std::vector<char> used_from(n, 0), used_to(n, 0);
    for (auto [x, y] : partial) {
      if (x < 0 || y < 0 || x >= n || y >= n) throw std::out_of_range("partial map vertex outside the graph");
      if (used_from[x] || used_to[y]) throw std::invalid_argument("partial map is not injective");
      used_from[x] = used_to[y] = 1;
    }
    std::vector<std::pair<Vertex, Vertex>> pairs(partial.begin(), partial.end());
    std::sort(pairs.begin(), pairs.end());

    Cells a = initial_cells(n, nullptr);
    refine_all(refiner_, a);
    Cells b = a;
    for (auto [x, y] : pairs) {
      if (a.start[a.pos[x]] != b.start[b.pos[y]]) return std::nullopt;
      if (a.len[a.start[a.pos[x]]] == 1) continue;  // already forced; checked at the leaf
      const int sa = individualize(a, x);
      const int sb = individualize(b, y);
      refiner_.run(a, std::span<const int>(&sa, 1));
      refiner_.run(b, std::span<const int>(&sb, 1));
      if (!same_shape(a, b)) return std::nullopt;
    }
    pairs_ = std::move(pairs);
    if (n == 0) return Permutation::identity(0);
    return descend(a, b);
  }

 private:
  std::optional<Permutation> descend(const Cells& a, const Cells& b) {
    if (a.discrete()) return check(a, b);
    const int ts = target_cell(a);
    const Vertex x = *std::min_element(a.lab.begin() + ts, a.lab.begin() + ts + a.len[ts]);
    std::vector<Vertex> images(b.lab.begin() + ts, b.lab.begin() + ts + b.len[ts]);
    std::sort(images.begin(), images.end());
    for (Vertex y : images) {
      Cells a2 = a, b2 = b;
      const int sa = individualize(a2, x);
      const int sb = individualize(b2, y);
      refiner_.run(a2, std::span<const int>(&sa, 1));
      refiner_.run(b2, std::span<const int>(&sb, 1));
      if (!same_shape(a2, b2)) continue;
      if (auto found = descend(a2, b2)) return found;
    }
    return std::nullopt;
  }

  std::optional<Permutation> check(const Cells& a, const Cells& b) const {
    std::vector<Vertex> images(a.lab.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[a.lab[i]] = b.lab[i];
    for (auto [x, y] : pairs_)
      if (images[x] != y) return std::nullopt;
    for (Vertex u = 0; u < g_.order(); ++u)
      for (Vertex v : g_.neighbors(u))
        if (u < v && !g_.adjacent(images[u], images[v])) return std::nullopt;
    return Permutation(std::move(images));
  }

  const Graph& g_;
  Refiner refiner_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
};

}  // namespace

bool OrderedPartition::discrete() const {
  return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.size() == 1; });
}

std::vector<std::size_t> OrderedPartition::cell_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& c : cells) sizes.push_back(c.size());
  return sizes;
}

OrderedPartition refine_coloring(const Graph& g, const VertexColoring& initial) {
  Cells c = initial_cells(g.order(), &initial);
  Refiner ref(g);
  refine_all(ref, c);
  OrderedPartition out;
  for (int i = 0; i < c.size(); i += c.len[i]) {
    std::vector<Vertex> cell(c.lab.begin() + i, c.lab.begin() + i + c.len[i]);
    std::sort(cell.begin(), cell.end());
    out.cells.push_back(std::move(cell));
  }
  return out;
}

SearchResult run_search(const Graph& g, SearchOptions options) {
  Searcher s(g, options.canonical);
  return s.run(options.coloring);
}

PermutationGroup automorphism_group(const Graph& g, const std::optional<VertexColoring>& coloring, std::uint64_t cap) {
  SearchOptions opts;
  opts.coloring = coloring ? &*coloring : nullptr;
  auto result = run_search(g, opts);
  return close_generators(g.order(), result.generators, cap);
}

std::optional<Permutation> extend_partial_map(const Graph& g, std::span<const std::pair<Vertex, Vertex>> partial) {
  Extender e(g);
  return e.run(partial);
}

Graph canonical_graph(const Graph& g) {
  SearchOptions opts;
  opts.canonical = true;
  auto result = run_search(g, opts);
  return relabel(g, result.canonical_position);
}

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace cubicsym

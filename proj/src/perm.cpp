#include "cubicsym/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace cubicsym {

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<Vertex>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Vertex x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
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
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;  // root stays the least index
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_same_degree(int a, int b) {
  if (a != b)
    throw std::invalid_argument("permutation degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Vertex x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[x])
      throw std::invalid_argument("image sequence is not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<Vertex> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Vertex>(i);
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<Vertex>(i)) return false;
  return true;
}

std::string Permutation::cycle_notation() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<Vertex>(start)) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = static_cast<std::size_t>(images_[x]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p.degree(), q.degree());
  std::vector<Vertex> images(static_cast<std::size_t>(q.degree()));
  for (int v = 0; v < q.degree(); ++v) images[v] = p(q(v));
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators,
                                   std::optional<std::vector<Permutation>> elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {
  for (const auto& g : generators_) require_same_degree(degree_, g.degree());
}

std::span<const Permutation> PermutationGroup::elements() const {
  if (!elements_) throw std::logic_error("permutation group is not materialized");
  return *elements_;
}

std::uint64_t PermutationGroup::order() const {
  if (!elements_) throw std::logic_error("permutation group is not materialized");
  return elements_->size();
}

bool PermutationGroup::contains(const Permutation& p) const {
  auto els = elements();
  return std::binary_search(els.begin(), els.end(), p);
}

PermutationGroup close_generators(int degree, std::span<const Permutation> generators, std::uint64_t cap) {
  for (const auto& g : generators) require_same_degree(degree, g.degree());
  std::unordered_set<std::vector<Vertex>, ImagesHash> seen;
  std::vector<std::vector<Vertex>> frontier;
  const Permutation id = Permutation::identity(degree);
  std::vector<Vertex> start(id.images().begin(), id.images().end());
  seen.insert(start);
  frontier.push_back(start);
  std::vector<Vertex> next(static_cast<std::size_t>(degree));
  while (!frontier.empty()) {
    std::vector<std::vector<Vertex>> grown;
    for (const auto& el : frontier) {
      for (const auto& g : generators) {
        for (int v = 0; v < degree; ++v) next[v] = g(el[v]);
        if (seen.insert(next).second) {
          if (seen.size() > cap) throw GroupTooLarge(cap);
          grown.push_back(next);
        }
      }
    }
    frontier.swap(grown);
  }
  std::vector<Permutation> elements;
  elements.reserve(seen.size());
  for (const auto& images : seen) elements.emplace_back(images);
  std::sort(elements.begin(), elements.end());
  std::vector<Permutation> gens(generators.begin(), generators.end());
  return PermutationGroup(degree, std::move(gens), std::move(elements));
}

// ---------------------------------------------------------------------------

std::size_t OrbitPartition::block_of(std::size_t point) const {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (std::find(blocks[b].begin(), blocks[b].end(), point) != blocks[b].end()) return b;
  throw std::out_of_range("point not in partition");
}

namespace {

std::vector<std::vector<Vertex>> action_points(Action action, const Graph& host) {
  std::vector<std::vector<Vertex>> pts;
  switch (action.kind) {
    case ActionKind::Vertices:
      for (Vertex v = 0; v < host.order(); ++v) pts.push_back({v});
      break;
    case ActionKind::Edges:
      for (auto [u, v] : host.edges()) pts.push_back({u, v});
      break;
    case ActionKind::Arcs:
      for (Vertex u = 0; u < host.order(); ++u)
        for (Vertex v : host.neighbors(u)) pts.push_back({u, v});
      break;
    case ActionKind::SArcs:
      pts = s_arcs(host, action.s);
      break;
  }
  return pts;
}

}  // namespace

OrbitPartition orbits(const PermutationGroup& group, Action action, const Graph& host) {
  require_same_degree(group.degree(), host.order());
  OrbitPartition part;
  part.points = action_points(action, host);
  std::map<std::vector<Vertex>, std::size_t> index;
  for (std::size_t i = 0; i < part.points.size(); ++i) index.emplace(part.points[i], i);

  UnionFind uf(part.points.size());
  std::vector<Vertex> image;
  for (const auto& g : group.generators()) {
    for (std::size_t i = 0; i < part.points.size(); ++i) {
      const auto& pt = part.points[i];
      image.resize(pt.size());
      for (std::size_t k = 0; k < pt.size(); ++k) image[k] = g(pt[k]);
      if (action.kind == ActionKind::Edges && image[0] > image[1]) std::swap(image[0], image[1]);
      auto it = index.find(image);
      if (it == index.end()) throw std::invalid_argument("group element does not preserve the host graph");
      uf.unite(i, it->second);
    }
  }
  std::map<std::size_t, std::size_t> block_of_root;
  for (std::size_t i = 0; i < part.points.size(); ++i) {
    auto [it, fresh] = block_of_root.emplace(uf.find(i), part.blocks.size());
    if (fresh) part.blocks.emplace_back();
    part.blocks[it->second].push_back(i);
  }
  return part;
}

std::vector<Vertex> vertex_orbit_labels(int degree, std::span<const Permutation> generators) {
  UnionFind uf(static_cast<std::size_t>(degree));
  for (const auto& g : generators)
    for (int v = 0; v < degree; ++v) uf.unite(static_cast<std::size_t>(v), static_cast<std::size_t>(g(v)));
  std::vector<Vertex> label(static_cast<std::size_t>(degree));
  for (int v = 0; v < degree; ++v) label[v] = static_cast<Vertex>(uf.find(static_cast<std::size_t>(v)));
  return label;
}

PermutationGroup stabilizer(const PermutationGroup& group, std::span<const Vertex> target, StabilizerMode mode) {
  if (!group.materialized()) throw std::logic_error("stabilizer requires a materialized group");
  for (Vertex v : target)
    if (v < 0 || v >= group.degree()) throw std::out_of_range("stabilizer target outside the group degree");
  if (mode == StabilizerMode::PointwiseVertex && target.empty())
    throw std::invalid_argument("pointwise vertex stabilizer needs a vertex");

  std::vector<char> in_set(static_cast<std::size_t>(group.degree()), 0);
  for (Vertex v : target) in_set[v] = 1;

  std::vector<Permutation> kept;
  for (const auto& el : group.elements()) {
    bool keep = true;
    switch (mode) {
      case StabilizerMode::PointwiseVertex:
        keep = el(target[0]) == target[0];
        break;
      case StabilizerMode::PointwiseSet:
        keep = std::all_of(target.begin(), target.end(), [&](Vertex v) { return el(v) == v; });
        break;
      case StabilizerMode::SetwiseSet:
        keep = std::all_of(target.begin(), target.end(), [&](Vertex v) { return in_set[el(v)] != 0; });
        break;
    }
    if (keep) kept.push_back(el);
  }

  // Greedy generating set: add an element whenever it lies outside the span so far.
  std::vector<Permutation> gens;
  std::vector<Permutation> span{Permutation::identity(group.degree())};
  for (const auto& el : kept) {
    if (std::binary_search(span.begin(), span.end(), el)) continue;
    gens.push_back(el);
    auto closed = close_generators(group.degree(), gens, kept.size());
    auto els = closed.elements();
    span.assign(els.begin(), els.end());
  }
  return PermutationGroup(group.degree(), std::move(gens), std::move(kept));
}

}  // namespace cubicsym

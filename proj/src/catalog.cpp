#include <algorithm>
#include <charconv>
#include <map>

#include "cubicsym/constructions.hpp"

namespace cubicsym {

namespace {

// Icosahedron from its standard embedding: apex, two staggered pentagons,
// antipode. Neighbors listed counterclockwise as seen from outside.
const std::vector<std::vector<Vertex>> kIcosahedronRotation = {
    {1, 2, 3, 4, 5},   {0, 5, 10, 6, 2}, {0, 1, 6, 7, 3},  {0, 2, 7, 8, 4},
    {0, 3, 8, 9, 5},   {0, 4, 9, 10, 1}, {1, 10, 11, 7, 2}, {2, 6, 11, 8, 3},
    {3, 7, 11, 9, 4},  {4, 8, 11, 10, 5}, {1, 5, 9, 11, 6}, {6, 10, 9, 8, 7},
};

CatalogEntry icosahedron() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 12; ++u)
    for (Vertex v : kIcosahedronRotation[u])
      if (u < v) edges.emplace_back(u, v);
  return {build_graph(12, edges), RotationSystem{kIcosahedronRotation}};
}

// v_i = i, u_i = 6 + i, w_i = 12 + i.
constexpr Vertex V(int i) { return ((i % 6) + 6) % 6; }
constexpr Vertex U(int i) { return 6 + V(i); }
constexpr Vertex W(int i) { return 12 + V(i); }

void hexagon_with_spokes(std::vector<Edge>& e) {
  for (int i = 0; i < 6; ++i) {
    e.emplace_back(V(i), V(i + 1));
    e.emplace_back(V(i), U(i));
  }
}

Graph heawood() {
  std::vector<Edge> e;
  hexagon_with_spokes(e);
  for (int i = 0; i < 3; ++i) e.emplace_back(U(i), U(i + 3));
  for (int i = 0; i < 6; ++i) e.emplace_back(U(i), 12 + i % 2);
  return build_graph(14, e);
}

Graph pappus() {
  std::vector<Edge> e;
  hexagon_with_spokes(e);
  for (int i = 0; i < 6; ++i) {
    e.emplace_back(U(i), W(i));
    e.emplace_back(W(i), U(i + 2));
  }
  for (int i = 0; i < 3; ++i) e.emplace_back(W(i), W(i + 3));
  return build_graph(18, e);
}

Graph omega18() {
  std::vector<Edge> e;
  hexagon_with_spokes(e);
  for (int i = 0; i < 3; ++i) e.emplace_back(U(i), U(i + 3));
  for (int i = 0; i < 6; ++i) e.emplace_back(U(i), W(i));
  return build_graph(18, e);
}

Graph fig5_lambda() {
  std::vector<Edge> e;
  hexagon_with_spokes(e);
  for (int i = 0; i < 3; ++i) e.emplace_back(U(i), U(i + 3));
  for (int i = 0; i < 6; ++i) {
    e.emplace_back(U(i), W(i));
    e.emplace_back(W(i), W(i + 1));
  }
  return build_graph(18, e);
}

Graph base_graph() {
  std::vector<Edge> e;
  hexagon_with_spokes(e);
  return build_graph(12, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(n, e);
}

Graph k33() {
  std::vector<Edge> e;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) e.emplace_back(i, j);
  return build_graph(6, e);
}

std::string normalize(std::string_view name) {
  std::string out(name);
  std::replace(out.begin(), out.end(), '-', '_');
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

void expect_params(std::string_view name, std::span<const int> params, std::size_t count) {
  if (params.size() != count)
    throw CatalogError("catalog entry '" + std::string(name) + "' takes " + std::to_string(count) + " parameter(s)");
}

}  // namespace

Graph cycle_graph(int n) {
  if (n < 3) throw CatalogError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

Graph path_graph(int n) {
  if (n < 1) throw CatalogError("path needs at least 1 vertex");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

Graph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n) throw CatalogError("gp(n,k) needs n >= 3 and 1 <= k < n/2");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n + i);
    e.emplace_back(n + i, n + (i + k) % n);
  }
  return build_graph(2 * n, e);
}

Graph prism(int k) {
  if (k < 3) throw CatalogError("prism needs k >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    e.emplace_back(i, (i + 1) % k);
    e.emplace_back(k + i, k + (i + 1) % k);
    e.emplace_back(i, k + i);
  }
  return build_graph(2 * k, e);
}

Graph moebius(int k) {
  if (k < 2) throw CatalogError("moebius needs k >= 2");
  std::vector<Edge> e;
  for (int i = 0; i < 2 * k; ++i) e.emplace_back(i, (i + 1) % (2 * k));
  for (int i = 0; i < k; ++i) e.emplace_back(i, i + k);
  return build_graph(2 * k, e);
}

Graph path_ladder(int k) {
  if (k < 1) throw CatalogError("path_ladder needs k >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    if (i + 1 < k) {
      e.emplace_back(i, i + 1);
      e.emplace_back(k + i, k + i + 1);
    }
    e.emplace_back(i, k + i);
  }
  return build_graph(2 * k, e);
}

Graph lcf_graph(int n, std::span<const int> jumps) {
  if (n < 3 || jumps.empty()) throw CatalogError("LCF notation needs n >= 3 and at least one jump");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) {
    const int j = ((i + jumps[i % jumps.size()]) % n + n) % n;
    if (i < j) e.emplace_back(i, j);
  }
  return build_graph(n, e);
}

CatalogEntry catalog_build(std::string_view raw, std::span<const int> params) {
  const std::string name = normalize(raw);
  auto plain = [&](Graph g) -> CatalogEntry {
    expect_params(name, params, 0);
    return {std::move(g), std::nullopt};
  };
  if (name == "k4") return plain(complete_graph(4));
  if (name == "k33") return plain(k33());
  if (name == "cube") return plain(prism(4));
  if (name == "petersen") return plain(generalized_petersen(5, 2));
  if (name == "dodecahedron") return plain(generalized_petersen(10, 2));
  if (name == "desargues") return plain(generalized_petersen(10, 3));
  if (name == "mobius_kantor") return plain(generalized_petersen(8, 3));
  if (name == "heawood") return plain(heawood());
  if (name == "pappus") return plain(pappus());
  if (name == "tutte_coxeter") {
    const int jumps[] = {-13, -9, 7, -7, 9, 13};
    return plain(lcf_graph(30, jumps));
  }
  if (name == "base_graph") return plain(base_graph());
  if (name == "omega18") return plain(omega18());
  if (name == "fig5_lambda") return plain(fig5_lambda());
  if (name == "icosahedron") {
    expect_params(name, params, 0);
    return icosahedron();
  }
  if (name == "truncated_icosahedron") {
    expect_params(name, params, 0);
    auto ico = icosahedron();
    auto rho = neighborhood_labeling(ico.graph, FromRotation{*ico.rotation});
    return {generalized_truncation(ico.graph, rho, cycle_graph(5)), std::nullopt};
  }
  if (name == "gp") {
    expect_params(name, params, 2);
    return {generalized_petersen(params[0], params[1]), std::nullopt};
  }
  if (name == "prism" || name == "moebius" || name == "path_ladder" || name == "cycle" || name == "path") {
    expect_params(name, params, 1);
    if (name == "prism") return {prism(params[0]), std::nullopt};
    if (name == "moebius") return {moebius(params[0]), std::nullopt};
    if (name == "path_ladder") return {path_ladder(params[0]), std::nullopt};
    if (name == "cycle") return {cycle_graph(params[0]), std::nullopt};
    return {path_graph(params[0]), std::nullopt};
  }
  throw CatalogError("unknown catalog name '" + std::string(raw) + "'");
}

CatalogEntry catalog_lookup(std::string_view text) {
  std::string_view name = text;
  std::string_view args;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    name = text.substr(0, colon);
    args = text.substr(colon + 1);
  } else if (auto paren = text.find('('); paren != std::string_view::npos) {
    if (text.back() != ')') throw CatalogError("unbalanced parentheses in '" + std::string(text) + "'");
    name = text.substr(0, paren);
    args = text.substr(paren + 1, text.size() - paren - 2);
  }
  std::vector<int> params;
  while (!args.empty()) {
    auto comma = args.find(',');
    auto field = args.substr(0, comma);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
      throw CatalogError("bad catalog parameter '" + std::string(field) + "'");
    params.push_back(value);
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  return catalog_build(name, params);
}

Graph catalog(std::string_view text) { return catalog_lookup(text).graph; }

std::vector<std::string> catalog_names() {
  return {"k4",          "k33",          "cube",        "petersen",   "dodecahedron",
          "desargues",   "mobius_kantor", "heawood",    "pappus",     "tutte_coxeter",
          "icosahedron", "truncated_icosahedron",       "base_graph", "omega18",
          "fig5_lambda"};
}

}  // namespace cubicsym

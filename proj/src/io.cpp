#include "cubicsym/io.hpp"

#include <charconv>

namespace cubicsym {

namespace {

constexpr int kBias = 63;
constexpr int kMaxOrder = 258047;

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOrder) throw PreconditionError("graph6 output limited to 258047 vertices");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0, bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) pos = header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  for (std::size_t i = pos; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > 126) throw ParseError("non-printable graph6 byte", i);
  }
  if (pos >= text.size()) throw ParseError("missing graph6 order byte", pos);

  long n = 0;
  if (text[pos] != '~') {
    n = text[pos] - kBias;
    pos += 1;
  } else {
    if (pos + 1 < text.size() && text[pos + 1] == '~')
      throw ParseError("8-byte graph6 order form is not supported", pos);
    if (pos + 4 > text.size()) throw ParseError("truncated graph6 order field", text.size());
    for (int k = 1; k <= 3; ++k) n = (n << 6) | (text[pos + k] - kBias);
    if (n < 63) throw ParseError("graph6 extended order below 63", pos);
    pos += 4;
  }

  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() - pos != body)
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(body),
                     text.size() < pos + body ? text.size() : pos + body);

  std::vector<Edge> edges;
  long long bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + static_cast<std::size_t>(bit / 6)] - kBias;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int byte = text[last] - kBias;
    const int pad = 6 - static_cast<int>(bit % 6);
    if ((byte & ((1 << pad) - 1)) != 0) throw ParseError("nonzero graph6 padding bits", last);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = "# order " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph from_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int n = 0;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      // "# order N" keeps trailing isolated vertices through a round trip.
      std::string_view comment = line.substr(hash + 1);
      while (!comment.empty() && comment.front() == ' ') comment.remove_prefix(1);
      if (comment.substr(0, 6) == "order ") {
        int declared = 0;
        auto [ptr, ec] = std::from_chars(comment.data() + 6, comment.data() + comment.size(), declared);
        if (ec == std::errc()) n = std::max(n, declared);
      }
      line = line.substr(0, hash);
    }

    int values[2];
    int found = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      const char c = line[i];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        continue;
      }
      if (found == 2) throw ParseError("more than two fields on edge line", line_start + i);
      int value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc() || value < 0) throw ParseError("expected a vertex index", line_start + i);
      values[found++] = value;
      i = static_cast<std::size_t>(ptr - line.data());
    }
    if (found == 1) throw ParseError("edge line needs two vertex indices", line_start);
    if (found == 2) {
      edges.emplace_back(values[0], values[1]);
      n = std::max({n, values[0] + 1, values[1] + 1});
    }
    line_start = line_end + 1;
  }
  return Graph::from_edges(n, edges);
}

}  // namespace cubicsym

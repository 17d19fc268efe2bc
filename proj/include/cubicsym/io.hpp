#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cubicsym/graph.hpp"

namespace cubicsym {

/// Malformed textual graph input; `offset()` is the 0-based byte position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// graph6 encoding. Orders up to 258047 are supported; the 8-byte order form
/// is rejected on decode.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// Edge-list text: one "u v" pair per line, 0-based, '#' starts a comment,
/// blank lines ignored. The order is one more than the largest index seen.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

}  // namespace cubicsym

#pragma once

#include "sqroot/graph.hpp"

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sqroot {

// Edge-list text format:
//   - '#' lines and blank lines are ignored;
//   - the first remaining line holds the vertex count n;
//   - every later line is "u v" with 0 <= u, v < n and u != v.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);

// Header line "n" followed by one "u v" line per edge, sorted by (min, max).
std::string serialize_edge_list(const Graph& g);

// `graph G { ... }` with sorted edges; isolated vertices are listed on their own.
std::string serialize_dot(const Graph& g);

}  // namespace sqroot

#include "sqroot/graph_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace sqroot {
namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_blank(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> to_index(std::string_view tok) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::optional<GraphBuilder> builder;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = tokens(raw);
    if (toks.empty() || toks.front().front() == '#') continue;

    if (!builder) {
      if (toks.size() != 1) throw ParseError(lineno, "expected the vertex count on its own line");
      auto n = to_index(toks[0]);
      if (!n) throw ParseError(lineno, "malformed vertex count '" + std::string(toks[0]) + "'");
      builder.emplace(*n);
      continue;
    }

    if (toks.size() != 2) throw ParseError(lineno, "expected \"u v\"");
    auto u = to_index(toks[0]);
    auto v = to_index(toks[1]);
    if (!u || !v) throw ParseError(lineno, "malformed vertex index");
    const std::size_t n = builder->vertex_count();
    if (*u >= n || *v >= n) throw ParseError(lineno, "vertex index out of range (n = " + std::to_string(n) + ")");
    if (*u == *v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(*u));
    if (!builder->add_edge(*u, *v))
      throw ParseError(lineno, "duplicate edge " + std::to_string(*u) + " " + std::to_string(*v));
  }
  if (!builder) throw ParseError(lineno + 1, "missing vertex count");
  return builder->build();
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string serialize_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out += "  " + std::to_string(v) + ";\n";
  }
  for (const Edge& e : g.edges()) out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace sqroot

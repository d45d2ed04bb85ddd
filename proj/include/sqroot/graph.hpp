#pragma once

#include "sqroot/vertex_set.hpp"

#include <compare>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace sqroot {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  // Orders the endpoints so that u < v.
  static Edge normalized(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Distance = std::size_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

class GraphBuilder;

// Undirected simple graph on vertices 0..n-1. Values are immutable once built;
// use GraphBuilder to assemble one edge at a time.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Throws std::invalid_argument on an out-of-range endpoint, a self-loop or a
  // repeated edge.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  VertexSet closed_neighborhood(Vertex v) const;
  std::size_t degree(Vertex v) const { return rows_[v].count(); }

  // Edges sorted by (min endpoint, max endpoint).
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& start);

  std::size_t vertex_count() const { return rows_.size(); }
  bool has_edge(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  // Returns false when the edge was already present. Self-loops and
  // out-of-range endpoints throw std::invalid_argument.
  bool add_edge(Vertex u, Vertex v);
  void add_edges_between(const VertexSet& left, const VertexSet& right);

  Graph build() const;

 private:
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

// Breadth-first distances; kUnreachable for vertices outside s's component.
std::vector<Distance> distances_from(const Graph& g, Vertex s);
std::vector<std::vector<Distance>> all_pairs_distances(const Graph& g);

// Distinct vertices are adjacent iff their distance in g is 1 or 2.
Graph square(const Graph& g);

// K0 and K1 count as connected.
bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// True iff every edge of `part` is an edge of `whole` (same vertex count).
bool is_edge_subgraph(const Graph& part, const Graph& whole);

bool graphs_equal(const Graph& g, const Graph& h);

}  // namespace sqroot

#include "sqroot/graph.hpp"

#include <deque>
#include <stdexcept>
#include <string>

namespace sqroot {

Graph::Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder builder(n);
  for (const Edge& e : edges) {
    if (!builder.add_edge(e.u, e.v))
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
  }
  *this = builder.build();
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet s = rows_[v];
  s.insert(v);
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < rows_.size(); ++u) {
    for (Vertex v = rows_[u].next(u); v < rows_.size(); v = rows_[u].next(v)) out.push_back({u, v});
  }
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : rows_(n, VertexSet(n)) {}

GraphBuilder::GraphBuilder(const Graph& start) : rows_(start.rows_), edge_count_(start.edge_count_) {}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  const std::size_t n = rows_.size();
  if (u >= n || v >= n)
    throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (rows_[u].contains(v)) return false;
  rows_[u].insert(v);
  rows_[v].insert(u);
  ++edge_count_;
  return true;
}

void GraphBuilder::add_edges_between(const VertexSet& left, const VertexSet& right) {
  left.for_each([&](Vertex u) {
    right.for_each([&](Vertex v) {
      if (u != v) add_edge(u, v);
    });
  });
}

Graph GraphBuilder::build() const {
  Graph g;
  g.rows_ = rows_;
  g.edge_count_ = edge_count_;
  return g;
}

std::vector<Distance> distances_from(const Graph& g, Vertex s) {
  const std::size_t n = g.vertex_count();
  if (s >= n) throw std::out_of_range("source vertex out of range");
  std::vector<Distance> dist(n, kUnreachable);
  std::deque<Vertex> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](Vertex w) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

std::vector<std::vector<Distance>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<Distance>> out;
  out.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(distances_from(g, v));
  return out;
}

Graph square(const Graph& g) {
  const std::size_t n = g.vertex_count();
  GraphBuilder builder(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexSet reach = g.neighbors(v);
    g.neighbors(v).for_each([&](Vertex u) { reach |= g.neighbors(u); });
    reach.erase(v);
    for (Vertex w = reach.next(v); w < n; w = reach.next(w)) builder.add_edge(v, w);
  }
  return builder.build();
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  VertexSet unseen = VertexSet::full(n);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = unseen.first(); s < n; s = unseen.first()) {
    VertexSet comp(n);
    VertexSet frontier(n, {s});
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet grown(n);
      frontier.for_each([&](Vertex u) { grown |= g.neighbors(u); });
      frontier = grown - comp;
    }
    unseen -= comp;
    comps.push_back(comp.members());
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  GraphBuilder builder(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) builder.add_edge(i, j);
    }
  }
  return builder.build();
}

bool is_edge_subgraph(const Graph& part, const Graph& whole) {
  if (part.vertex_count() != whole.vertex_count()) return false;
  for (Vertex v = 0; v < part.vertex_count(); ++v) {
    if (!part.neighbors(v).is_subset_of(whole.neighbors(v))) return false;
  }
  return true;
}

bool graphs_equal(const Graph& g, const Graph& h) { return g == h; }

}  // namespace sqroot

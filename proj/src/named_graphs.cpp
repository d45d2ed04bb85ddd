#include "sqroot/named_graphs.hpp"

#include <stdexcept>

namespace sqroot::named {

Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return b.build();
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph star(std::size_t leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return b.build();
}

Graph complete_multipartite(std::size_t parts, std::size_t part_size) {
  const std::size_t n = parts * part_size;
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (u / part_size != v / part_size) b.add_edge(u, v);
  return b.build();
}

Graph gem() {
  const Edge edges[] = {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {1, 2}, {2, 3}, {2, 4}};
  return Graph(5, edges);
}

Graph three_sun() {
  const Edge edges[] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}};
  return Graph(6, edges);
}

Graph helly_obstruction(int index) {
  if (index < 1 || index > 4) throw std::invalid_argument("hereditary clique-Helly obstructions are numbered 1..4");
  GraphBuilder b(6);
  // triangle a=0, b=1, c=2; a'=3, b'=4, c'=5
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(0, 2);
  b.add_edge(3, 1);
  b.add_edge(3, 2);
  b.add_edge(4, 0);
  b.add_edge(4, 2);
  b.add_edge(5, 0);
  b.add_edge(5, 1);
  if (index >= 2) b.add_edge(3, 4);
  if (index >= 3) b.add_edge(4, 5);
  if (index >= 4) b.add_edge(3, 5);
  return b.build();
}

}  // namespace sqroot::named

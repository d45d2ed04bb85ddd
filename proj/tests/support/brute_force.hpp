#pragma once

// Exhaustive reference checks for small graphs. Everything here works from
// raw adjacency and Floyd-Warshall distances so that it stays independent of
// the library routines it is compared against.

#include "sqroot/graph.hpp"

#include <cstddef>
#include <vector>

namespace sqroot::brute {

inline constexpr std::size_t kFar = 1u << 20;

std::vector<std::vector<std::size_t>> floyd_distances(const Graph& g);

// u ~ v iff 1 <= dist(u, v) <= 2, via Floyd-Warshall.
Graph square_by_distances(const Graph& g);

// Some vertex subset of size >= 4 induces a cycle.
bool has_induced_long_cycle(const Graph& g);

// Some 5-subset has 7 edges and degree sequence (2,2,3,3,4).
bool has_induced_gem(const Graph& g);

// Connected and the ptolemaic inequality holds for every 4 vertices.
bool satisfies_ptolemaic_inequality(const Graph& g);

// Every induced path between u and v has exactly dist(u, v) edges.
bool is_distance_hereditary_by_paths(const Graph& g);

// Some 6-subset is isomorphic to one of the four hereditary clique-Helly
// obstructions (3-sun plus 0..3 edges among its outer vertices).
bool has_helly_obstruction(const Graph& g);

// Some 6-subset induces a 3-sun.
bool has_induced_three_sun(const Graph& g);

// Vertex set splits into a clique and an independent set.
bool is_split_by_enumeration(const Graph& g);

// All maximal cliques as sorted member lists, sorted lexicographically.
std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g);

}  // namespace sqroot::brute

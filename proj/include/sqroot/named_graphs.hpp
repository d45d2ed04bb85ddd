#pragma once

#include "sqroot/graph.hpp"

#include <cstddef>

namespace sqroot::named {

Graph path(std::size_t n);      // 0-1-...-(n-1)
Graph cycle(std::size_t n);     // n >= 3
Graph complete(std::size_t n);
Graph star(std::size_t leaves); // centre 0
Graph complete_multipartite(std::size_t parts, std::size_t part_size);

// P4 on (0,1,3,4) plus apex 2 adjacent to all of it.
Graph gem();

// Triangle 0,1,2; vertex 3 sees 0,1; vertex 4 sees 1,2; vertex 5 sees 2,0.
Graph three_sun();

// The four 6-vertex graphs whose absence characterises hereditary
// clique-Helly graphs. Vertices 0,1,2 form the triangle (a,b,c); 3, 4, 5 are
// a', b', c' with a' ~ b,c, b' ~ a,c, c' ~ a,b. Pattern i (1-based) adds
// i - 1 edges among the primed vertices: none, a'b', a'b' + b'c', all three.
Graph helly_obstruction(int index);

}  // namespace sqroot::named

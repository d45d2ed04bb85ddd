#pragma once

#include "sqroot/graph.hpp"
#include "sqroot/root_result.hpp"

namespace sqroot {

/// Decides whether G is the square of a connected 3-sun-free split graph.
///
/// G qualifies iff it is free of the four hereditary clique-Helly
/// obstructions and the common intersection C of its maximal cliques
/// Q_1..Q_q has at least q vertices. The root puts a clique on C, picks the q
/// lowest vertices of C as representatives c_i, and joins every other vertex
/// v to each c_i with v ∈ Q_i.
///
/// Checks run cheapest first: clique count (capped at n), intersection size,
/// then the obstruction search. A successful root is re-verified before it is
/// returned.
RootResult three_sun_free_split_root(const Graph& g);

}  // namespace sqroot

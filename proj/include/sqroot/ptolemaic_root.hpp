#pragma once

#include "sqroot/cliques.hpp"
#include "sqroot/graph.hpp"
#include "sqroot/root_result.hpp"

#include <optional>
#include <span>
#include <vector>

namespace sqroot {

// Candidate centres for every maximal clique A of G:
//   X_A = ⋂{C : A∩C ≠ ∅, C not reached from A by a gem-triple}
//         \ ⋃{C : (A, B, C) is a gem-triple for some B}.
struct CenterPlan {
  std::vector<VertexSet> candidates;         // X_A, indexed like the clique family
  std::vector<std::vector<std::size_t>> groups;  // cliques sharing an identical X set, canonical order
  std::optional<std::vector<Vertex>> assignment;  // x_A per clique once assigned
};

/// Edges uv with u ∈ A∩C and v ∈ (A∪C)∩B, u ≠ v, over all gem-triples
/// (A, B, C). Sorted, without duplicates.
std::vector<Edge> forced_edges(const Graph& g, const CliqueFamily& family, std::span<const GemTriple> triples);

CenterPlan candidate_centers(const Graph& g, const CliqueFamily& family, std::span<const GemTriple> triples);

/// Assigns distinct centres x_A ∈ X_A. Within each group of identical X sets
/// the lowest unused vertices go to the cliques in canonical order. Returns
/// std::nullopt when some group has fewer candidates than cliques.
std::optional<CenterPlan> assign_centers(CenterPlan plan);

/// Decides whether G has a ptolemaic square root and, if so, returns one
/// with the minimum number of edges.
RootResult ptolemaic_square_root(const Graph& g);

}  // namespace sqroot

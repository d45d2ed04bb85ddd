#pragma once

#include "sqroot/graph.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace sqroot {

// A permutation of the vertices. When produced by chordal_order it is a
// perfect elimination order: the later neighbours of every vertex form a clique.
struct EliminationOrder {
  std::vector<Vertex> sequence;
};

struct ChordalCheck {
  std::optional<EliminationOrder> order;  // set iff the graph is chordal
  Vertex failed_at = 0;                   // vertex whose later neighbours are not a clique

  bool chordal() const { return order.has_value(); }
};

enum class PatternId { Gem, C4, ThreeSun, G1, G2, G3, G4, PseudoP5Failure };

std::string_view to_string(PatternId id);

struct ForbiddenPattern {
  PatternId id;
  std::vector<Vertex> witness;
};

struct SplitPartition {
  std::vector<Vertex> clique;
  std::vector<Vertex> independent;
};

/// Maximum-cardinality search followed by the standard perfection check.
/// The returned order eliminates vertices in reverse visiting order.
ChordalCheck chordal_order(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& order);

/// Degree-sequence test. On success returns one clique/independent partition.
std::optional<SplitPartition> split_partition(const Graph& g);
inline bool is_split(const Graph& g) { return split_partition(g).has_value(); }

/// Pruning recognizer: repeatedly removes the lowest-indexed vertex that is
/// pendant or has a (true or false) twin among the remaining vertices; the
/// graph is distance-hereditary iff one vertex remains at the end.
bool is_distance_hereditary(const Graph& g);

/// Connected, chordal and distance-hereditary. K0 is rejected, K1 accepted.
bool is_ptolemaic(const Graph& g);

/// Chordal and diamond-free (every block is a clique).
bool is_block_graph(const Graph& g);
bool is_tree(const Graph& g);

/// Induced gem with the smallest sorted vertex set. The witness is ordered
/// (p1, p2, apex, p3, p4) where p1-p2-p3-p4 is the induced P4 and p1 < p4.
std::optional<ForbiddenPattern> find_gem(const Graph& g);

/// Visits every induced gem once, in the same (p1, p2, apex, p3, p4) form.
/// The callback returns false to stop early.
template <class Fn>
void for_each_gem(const Graph& g, Fn&& fn);

/// Distance conditions (i)-(iv) of a pseudo-P5 on the ordered tuple.
/// Throws std::invalid_argument on out-of-range or repeated vertices.
bool is_pseudo_p5(const Graph& h, const std::array<Vertex, 5>& tuple);

/// Induced 3-sun (v1, v2, v3, u1, u2, u3) with v1 < v2 < v3 the triangle and
/// u1 ~ v1,v2; u2 ~ v2,v3; u3 ~ v3,v1. Lexicographically least such tuple.
std::optional<ForbiddenPattern> find_3sun(const Graph& g);

struct HellyCheck {
  bool hereditary_clique_helly = true;
  std::optional<ForbiddenPattern> witness;  // (a, b, c, a', b', c') of some G_i
};

/// A graph contains one of G1..G4 iff some triangle {a,b,c} admits vertices
/// a' ~ b,c with a' !~ a, and likewise b' and c'.
HellyCheck hereditary_clique_helly(const Graph& g);
inline bool is_hereditary_clique_helly(const Graph& g) { return hereditary_clique_helly(g).hereditary_clique_helly; }

// ---------------------------------------------------------------------------

template <class Fn>
void for_each_gem(const Graph& g, Fn&& fn) {
  const std::size_t n = g.vertex_count();
  for (Vertex apex = 0; apex < n; ++apex) {
    const VertexSet& around = g.neighbors(apex);
    // Orient each P4 by its middle edge (p2, p3) and require p1 < p4.
    for (Vertex p2 = around.first(); p2 < n; p2 = around.next(p2)) {
      const VertexSet mid = g.neighbors(p2) & around;
      for (Vertex p3 = mid.first(); p3 < n; p3 = mid.next(p3)) {
        VertexSet ends1 = mid - g.neighbors(p3);
        ends1.erase(p3);
        if (ends1.empty()) continue;
        VertexSet ends4 = (g.neighbors(p3) & around) - g.neighbors(p2);
        ends4.erase(p2);
        for (Vertex p1 = ends1.first(); p1 < n; p1 = ends1.next(p1)) {
          VertexSet last = ends4 - g.neighbors(p1);
          for (Vertex p4 = last.next(p1); p4 < n; p4 = last.next(p4)) {
            if (!fn(std::array<Vertex, 5>{p1, p2, apex, p3, p4})) return;
          }
        }
      }
    }
  }
}

}  // namespace sqroot

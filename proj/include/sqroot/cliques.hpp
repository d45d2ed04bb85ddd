#pragma once

#include "sqroot/graph.hpp"
#include "sqroot/recognizers.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sqroot {

// Maximal cliques of a graph in canonical order (lexicographic on the sorted
// member lists) together with every pairwise intersection.
class CliqueFamily {
 public:
  CliqueFamily() = default;
  // Sorts `cliques` canonically and materialises the intersection table.
  CliqueFamily(std::size_t universe, std::vector<VertexSet> cliques);

  std::size_t size() const { return cliques_.size(); }
  std::size_t universe() const { return universe_; }
  const VertexSet& operator[](std::size_t i) const { return cliques_[i]; }
  const std::vector<VertexSet>& cliques() const { return cliques_; }
  const VertexSet& intersection(std::size_t i, std::size_t j) const { return meets_[i * cliques_.size() + j]; }

  auto begin() const { return cliques_.begin(); }
  auto end() const { return cliques_.end(); }

 private:
  std::size_t universe_ = 0;
  std::vector<VertexSet> cliques_;
  std::vector<VertexSet> meets_;
};

struct GemTriple {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;

  friend auto operator<=>(const GemTriple&, const GemTriple&) = default;
};

/// Candidates {v} + later neighbours of v, keeping the inclusion-maximal ones.
/// Throws std::logic_error if `order` is not a perfect elimination order.
CliqueFamily maximal_cliques_chordal(const Graph& g, const EliminationOrder& order);

/// Pivoting Bron-Kerbosch enumeration. Returns std::nullopt as soon as more
/// than `cap` maximal cliques have been found.
std::optional<CliqueFamily> maximal_cliques_capped(const Graph& g, std::size_t cap);

/// Ordered triples (A, B, C) of distinct cliques with A∩C nonempty,
/// A∩C ⊆ B, A∩B ⊄ C and B∩C ⊄ A, in lexicographic index order.
std::vector<GemTriple> enumerate_gem_triples(const CliqueFamily& family);

bool is_gem_triple(const CliqueFamily& family, const GemTriple& t);

}  // namespace sqroot

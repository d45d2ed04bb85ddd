#pragma once

#include "sqroot/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sqroot {

// Identifier of the pseudo-random engine behind every generator.
inline constexpr std::string_view kGeneratorRng = "mt19937_64";

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PtolemaicGenSpec {
  std::size_t vertices = 1;
  std::uint64_t seed = 0;
  double pendant_weight = 1.0;
  double true_twin_weight = 1.0;
  double false_twin_weight = 1.0;  // only applied to simplicial, non-isolated vertices
  bool shuffle_labels = true;
};

enum class SplitMode { Nested, Laminar, Rejection };

std::string_view to_string(SplitMode mode);

struct SplitGenSpec {
  std::size_t clique_size = 1;
  std::size_t independent_size = 0;
  double density = 0.5;
  SplitMode mode = SplitMode::Nested;
  std::uint64_t seed = 0;
  bool shuffle_labels = true;
  std::size_t max_attempts = 1000;  // rejection mode only
};

/// Grows a ptolemaic graph from K1 by pendant vertices, true twins and
/// false twins of simplicial vertices. Throws std::invalid_argument on a bad
/// spec.
Graph random_ptolemaic(const PtolemaicGenSpec& spec);

/// Connected split graph without an induced 3-sun. Nested mode gives the
/// independent vertices prefixes of one clique order, sized by `density`.
/// Laminar mode draws them from a random laminar family of clique intervals
/// (any two are nested or disjoint), so the square is usually not complete;
/// `density` is the chance of subdividing an interval further. Rejection mode
/// samples uniformly at the given density and resamples until 3-sun-free,
/// throwing GenerationError after max_attempts failures.
Graph random_3sunfree_split(const SplitGenSpec& spec);

// '#' comment lines recording generator, engine, seed and parameters.
std::string describe(const PtolemaicGenSpec& spec);
std::string describe(const SplitGenSpec& spec);

}  // namespace sqroot

#pragma once

#include "sqroot/graph.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace sqroot {

enum class RootClass { Ptolemaic, Split3SunFree, Any };

std::string_view to_string(RootClass cls);
std::optional<RootClass> root_class_from_string(std::string_view name);

// Membership as decided by the recognizers. Split3SunFree means connected,
// split and without an induced 3-sun.
bool in_class(RootClass cls, const Graph& h);

enum class OracleStatus { Found, NoRoot, BudgetExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::NoRoot;
  std::optional<Graph> root;
  std::uint64_t examined = 0;  // edge subsets actually tested
};

inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 25;

// Exhaustive minimum-edge square root within `cls`. Edge subsets of G are
// visited by increasing size, then lexicographically over the canonical edge
// list, so the first hit has the fewest edges. When G is connected, subsets
// with fewer than n - 1 edges or a disconnected spanning graph are skipped.
// Supports graphs with at most 64 vertices.
OracleResult min_root_bruteforce(const Graph& g, RootClass cls, std::uint64_t budget = kDefaultOracleBudget);

}  // namespace sqroot

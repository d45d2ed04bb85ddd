#include "sqroot/oracle.hpp"

#include "sqroot/recognizers.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace sqroot {

std::string_view to_string(RootClass cls) {
  switch (cls) {
    case RootClass::Ptolemaic: return "ptolemaic";
    case RootClass::Split3SunFree: return "split3sf";
    case RootClass::Any: return "any";
  }
  return "unknown";
}

std::optional<RootClass> root_class_from_string(std::string_view name) {
  if (name == "ptolemaic") return RootClass::Ptolemaic;
  if (name == "split3sf" || name == "split-3sun-free") return RootClass::Split3SunFree;
  if (name == "any") return RootClass::Any;
  return std::nullopt;
}

bool in_class(RootClass cls, const Graph& h) {
  switch (cls) {
    case RootClass::Ptolemaic: return is_ptolemaic(h);
    case RootClass::Split3SunFree: return is_connected(h) && is_split(h) && !find_3sun(h);
    case RootClass::Any: return true;
  }
  return false;
}

namespace {

using Row = std::uint64_t;

bool spans_connected(const std::vector<Row>& rows) {
  const std::size_t n = rows.size();
  if (n <= 1) return true;
  const Row all = n == 64 ? ~Row{0} : (Row{1} << n) - 1;
  Row seen = 1;
  Row frontier = 1;
  while (frontier) {
    Row next = 0;
    for (Row f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

bool squares_to(const std::vector<Row>& rows, const std::vector<Row>& target) {
  for (std::size_t v = 0; v < rows.size(); ++v) {
    Row reach = rows[v];
    for (Row f = rows[v]; f; f &= f - 1) reach |= rows[std::countr_zero(f)];
    reach &= ~(Row{1} << v);
    if (reach != target[v]) return false;
  }
  return true;
}

}  // namespace

OracleResult min_root_bruteforce(const Graph& g, RootClass cls, std::uint64_t budget) {
  const std::size_t n = g.vertex_count();
  if (n > 64) throw std::invalid_argument("brute-force oracle supports at most 64 vertices");
  if (budget == 0) throw std::invalid_argument("oracle budget must be positive");

  const std::vector<Edge> edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<Row> target(n, 0);
  for (const Edge& e : edges) {
    target[e.u] |= Row{1} << e.v;
    target[e.v] |= Row{1} << e.u;
  }
  const bool connected = is_connected(g);
  const std::size_t smallest = connected && n > 0 ? n - 1 : 0;

  OracleResult result;
  std::vector<Row> rows(n);
  for (std::size_t k = smallest; k <= m; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      if (result.examined == budget) {
        result.status = OracleStatus::BudgetExceeded;
        return result;
      }
      ++result.examined;

      std::fill(rows.begin(), rows.end(), Row{0});
      for (std::size_t i : pick) {
        rows[edges[i].u] |= Row{1} << edges[i].v;
        rows[edges[i].v] |= Row{1} << edges[i].u;
      }
      if ((!connected || spans_connected(rows)) && squares_to(rows, target)) {
        std::vector<Edge> chosen;
        chosen.reserve(k);
        for (std::size_t i : pick) chosen.push_back(edges[i]);
        Graph candidate(n, chosen);
        if (in_class(cls, candidate)) {
          result.status = OracleStatus::Found;
          result.root = std::move(candidate);
          return result;
        }
      }

      // Advance to the next k-combination of 0..m-1 in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  result.status = OracleStatus::NoRoot;
  return result;
}

}  // namespace sqroot

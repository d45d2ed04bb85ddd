// Sanity checks for the exhaustive reference routines used by other tests.
#include "support/brute_force.hpp"
#include "support/corpus.hpp"

#include "sqroot/named_graphs.hpp"

#include <doctest.h>

using namespace sqroot;

TEST_CASE("isomorphism classes of connected graphs match the known counts") {
  const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(corpus::connected_graphs_up_to_isomorphism(n).size() == expected[n]);
}

TEST_CASE("reference checks on textbook graphs") {
  CHECK(brute::has_induced_long_cycle(named::cycle(4)));
  CHECK(brute::has_induced_long_cycle(named::cycle(7)));
  CHECK_FALSE(brute::has_induced_long_cycle(named::complete(5)));
  CHECK_FALSE(brute::has_induced_long_cycle(named::path(6)));

  CHECK(brute::has_induced_gem(named::gem()));
  CHECK_FALSE(brute::has_induced_gem(named::complete(5)));

  CHECK(brute::satisfies_ptolemaic_inequality(named::path(5)));
  CHECK_FALSE(brute::satisfies_ptolemaic_inequality(named::cycle(4)));
  CHECK_FALSE(brute::satisfies_ptolemaic_inequality(named::gem()));

  CHECK(brute::is_distance_hereditary_by_paths(named::cycle(4)));
  CHECK_FALSE(brute::is_distance_hereditary_by_paths(named::cycle(5)));

  CHECK(brute::has_induced_three_sun(named::three_sun()));
  for (int i = 1; i <= 4; ++i) CHECK(brute::has_helly_obstruction(named::helly_obstruction(i)));
  CHECK_FALSE(brute::has_helly_obstruction(named::complete(6)));

  CHECK(brute::is_split_by_enumeration(named::three_sun()));
  CHECK_FALSE(brute::is_split_by_enumeration(named::cycle(4)));

  CHECK(brute::maximal_cliques(named::cycle(4)) ==
        std::vector<std::vector<Vertex>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

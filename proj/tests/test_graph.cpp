#include "sqroot/graph.hpp"
#include "sqroot/graph_io.hpp"
#include "sqroot/named_graphs.hpp"

#include "support/brute_force.hpp"
#include "support/corpus.hpp"

#include <doctest.h>

#include <random>

using namespace sqroot;

TEST_CASE("parse_graph reads the edge-list format") {
  const Graph p3 = parse_graph("3\n0 1\n1 2");
  CHECK(p3 == named::path(3));

  const Graph k1 = parse_graph("1");
  CHECK(k1.vertex_count() == 1);
  CHECK(k1.edge_count() == 0);

  const Graph commented = parse_graph("# generated\n\n4\n# body\n2 3\n  0   1  \n\n");
  CHECK(commented.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
}

TEST_CASE("parse_graph reports errors with line numbers") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("2\n0 0") == 2);           // self-loop
  CHECK(line_of("3\n0 1\n1 0") == 3);      // duplicate edge
  CHECK(line_of("3\n0 1\n1 3") == 3);      // out of range
  CHECK(line_of("3\n0 x") == 2);           // malformed
  CHECK(line_of("3\n0 1 2") == 2);         // too many fields
  CHECK(line_of("# only a comment\n") == 2);  // missing header
  CHECK(line_of("three\n") == 1);
  CHECK(line_of("-1\n") == 1);
  CHECK_THROWS_AS(parse_graph("2\n0 0"), ParseError);
}

TEST_CASE("canonical serialization") {
  const Edge edges[] = {{3, 1}, {0, 2}, {2, 1}};
  const Graph g(4, edges);
  CHECK(serialize_edge_list(g) == "4\n0 2\n1 2\n1 3\n");
  CHECK(serialize_dot(g) == "graph G {\n  0 -- 2;\n  1 -- 2;\n  1 -- 3;\n}\n");
  CHECK(serialize_dot(Graph(2)) == "graph G {\n  0;\n  1;\n}\n");
}

TEST_CASE("parse after serialize is the identity") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const Graph g = corpus::random_graph(1 + rng() % 15, 0.4, rng);
    CHECK(parse_graph(serialize_edge_list(g)) == g);
  }
}

TEST_CASE("square of small graphs") {
  // P5 square; expected edge list confirmed by Floyd-Warshall distances.
  const Edge sq[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}, {1, 3}, {2, 4}};
  const Graph p5sq(5, sq);
  CHECK(square(named::path(5)) == p5sq);
  CHECK(brute::square_by_distances(named::path(5)) == p5sq);
  CHECK(graphs_equal(square(named::path(5)), p5sq));

  CHECK(square(named::complete(4)) == named::complete(4));

  const Graph fig = corpus::dh_example_root();
  CHECK(square(fig) == corpus::dh_example_square());
  CHECK(square(fig).edge_count() == 15);
}

TEST_CASE("square agrees with the distance definition") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Graph g = corpus::random_graph(1 + rng() % 12, 0.25, rng);
    const Graph sq = square(g);
    CHECK(sq == brute::square_by_distances(g));
    CHECK(is_edge_subgraph(g, sq));
  }
  for (std::size_t n = 1; n < 8; ++n) CHECK(square(named::complete(n)) == named::complete(n));
}

TEST_CASE("distances_from") {
  CHECK(distances_from(named::path(5), 0) == std::vector<Distance>{0, 1, 2, 3, 4});
  CHECK(distances_from(Graph(2), 0) == std::vector<Distance>{0, kUnreachable});
  CHECK(distances_from(corpus::pseudo_p5_example(), 0)[4] == 4);
  CHECK_THROWS_AS(distances_from(Graph(2), 2), std::out_of_range);
}

TEST_CASE("graphs_equal and connectivity") {
  CHECK(graphs_equal(named::path(3), named::path(3)));
  CHECK_FALSE(graphs_equal(named::path(3), named::complete(3)));
  CHECK_FALSE(graphs_equal(Graph(2), Graph(3)));

  CHECK(is_connected(named::path(5)));
  const Edge two[] = {{0, 1}, {2, 3}};
  CHECK_FALSE(is_connected(Graph(4, two)));
  CHECK(is_connected(corpus::dh_example_root()));
  CHECK(is_connected(Graph(0)));
  CHECK(is_connected(Graph(1)));
  CHECK(connected_components(Graph(4, two)).size() == 2);
}

TEST_CASE("a root is always an edge-subgraph of its square") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const Graph r = corpus::random_graph(2 + rng() % 10, 0.3, rng);
    CHECK(is_edge_subgraph(r, square(r)));
  }
}

TEST_CASE("graph construction rejects bad edges") {
  const Edge loop[] = {{1, 1}};
  CHECK_THROWS_AS(Graph(2, loop), std::invalid_argument);
  const Edge far[] = {{0, 5}};
  CHECK_THROWS_AS(Graph(2, far), std::invalid_argument);
  const Edge dup[] = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(2, dup), std::invalid_argument);
}

TEST_CASE("induced_subgraph relabels in the given order") {
  const Graph g = named::path(5);
  const Vertex keep[] = {4, 3, 1};
  const Graph sub = induced_subgraph(g, keep);
  CHECK(sub.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("vertex set ordering is lexicographic on members") {
  CHECK(VertexSet(5, {0, 3}) < VertexSet(5, {1}));
  CHECK(VertexSet(5, {0, 1}) < VertexSet(5, {0, 1, 4}));
  CHECK(VertexSet(5, {0, 2}) > VertexSet(5, {0, 1, 4}));
  CHECK(VertexSet(5, {2}) == VertexSet(5, {2}));
}

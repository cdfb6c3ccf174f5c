#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gfree/graph.hpp"
#include "gfree/graph6.hpp"

using namespace gfree;

TEST_CASE("parse_graph6 hand-verified encodings") {
  Graph k2 = parse_graph6("A_");
  CHECK(k2.n == 2);
  CHECK(k2.has_edge(0, 1));

  Graph e5 = parse_graph6("D??");
  CHECK(e5.n == 5);
  CHECK(e5.edge_count() == 0);

  Graph c5 = parse_graph6("Dhc");
  CHECK(c5 == make_cycle(5));

  CHECK(parse_graph6("C~") == make_complete(4));
  CHECK(parse_graph6("@").n == 1);
  CHECK(parse_graph6("Bg") == make_path(3));
}

TEST_CASE("write_graph6 matches the reference encodings") {
  CHECK(write_graph6(make_complete(2)) == "A_");
  CHECK(write_graph6(Graph(1)) == "@");
  CHECK(write_graph6(Graph(5)) == "D??");
  CHECK(write_graph6(make_cycle(5)) == "Dhc");
  CHECK(write_graph6(make_complete(4)) == "C~");
  CHECK(write_graph6(make_path(3)) == "Bg");
}

TEST_CASE("whitespace around a graph6 line is ignored") {
  CHECK(parse_graph6("  Dhc\n") == make_cycle(5));
}

TEST_CASE("round trip on random graphs") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g(n);
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (rng() % 2) g.add_edge(u, v);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("parse_graph6 rejects malformed input") {
  CHECK_THROWS_WITH_AS(parse_graph6(" \n "), doctest::Contains("empty"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_graph6("~??"), doctest::Contains("long-form"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_graph6("D?"), doctest::Contains("truncated"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_graph6("A_x"), doctest::Contains("trailing"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_graph6("D\x01\x01"), doctest::Contains("payload byte"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_graph6("\x01"), doctest::Contains("header"), std::runtime_error);
}

TEST_CASE("edge-list parsing") {
  CHECK(parse_edge_list("3\n0 1\n1 2") == make_path(3));

  Graph dup = parse_edge_list("4\n0 1\n0 1");
  CHECK(dup.edge_count() == 1);
  CHECK(degree_stats(dup).max_degree == 1);
  CHECK(degree_stats(dup).min_degree == 0);

  CHECK_THROWS_WITH_AS(parse_edge_list("2\n0 0"), doctest::Contains("self-loop"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_edge_list("2\n0 5"), doctest::Contains("out of range"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_edge_list("2\n0 x"), doctest::Contains("non-integer"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_edge_list("2\n0 1 2"), doctest::Contains("trailing"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_edge_list(""), doctest::Contains("empty"), std::runtime_error);
  // blank lines are fine
  CHECK(parse_edge_list("3\n\n0 1\n\n1 2\n") == make_path(3));
}

TEST_CASE("named graph shorthands") {
  CHECK(parse_named("K7") == make_complete(7));
  CHECK(parse_named("C9") == make_cycle(9));
  CHECK(parse_named("P5") == make_path(5));
  CHECK(parse_named("K3,3,3") == make_complete_multipartite({3, 3, 3}));
  CHECK(parse_named("petersen") == make_petersen());
  CHECK(!parse_named("Q3"));
  CHECK(!parse_named("C2"));
  CHECK(!parse_named("K0"));
}

TEST_CASE("generators have the documented shapes") {
  Graph k333 = make_complete_multipartite({3, 3, 3});
  CHECK(k333.n == 9);
  CHECK(k333.edge_count() == 27);
  CHECK(degree_stats(k333).max_degree == 6);
  CHECK(degree_stats(k333).min_degree == 6);

  Graph pet = make_petersen();
  CHECK(pet.n == 10);
  CHECK(pet.edge_count() == 15);
  CHECK(is_regular(pet, pet.vertex_set()) == 3);

  CHECK(make_cycle(3) == make_complete(3));

  long degsum = 0;
  for (int v = 0; v < k333.n; ++v) degsum += k333.degree(v);
  CHECK(degsum == 2 * k333.edge_count());
}

TEST_CASE("components, regularity, acyclicity") {
  Graph c5 = make_cycle(5);
  auto comps = connected_components(c5, vbit(1) | vbit(3) | vbit(4));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == vbit(1));
  CHECK(comps[1] == (vbit(3) | vbit(4)));
  CHECK(connected_components(c5, 0).empty());

  CHECK(is_regular(make_cycle(6), full_set(6)) == 2);
  Graph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  CHECK(!is_regular(star, full_set(4)));
  CHECK_THROWS_AS(is_regular(star, 0), std::invalid_argument);

  CHECK(is_acyclic(star, full_set(4)));
  CHECK(!is_acyclic(c5, full_set(5)));
  CHECK(is_acyclic(c5, full_set(5) & ~vbit(2)));
}

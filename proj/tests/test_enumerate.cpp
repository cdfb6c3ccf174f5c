#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gfree/canonical.hpp"
#include "oracles.hpp"

using namespace gfree;

TEST_CASE("connected graph counts up to isomorphism") {
  const long expect[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n)
    CHECK(static_cast<long>(enumerate_connected_graphs(n).size()) == expect[n - 1]);
  CHECK_THROWS_AS(enumerate_all_graphs(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_all_graphs(9), std::invalid_argument);
}

TEST_CASE("counts match the brute-force edge-subset oracle") {
  for (int n = 1; n <= 6; ++n)
    CHECK(static_cast<long>(enumerate_connected_graphs(n).size()) ==
          oracle::count_connected_brute(n));
}

TEST_CASE("the two connected graphs on 3 vertices are P3 and K3") {
  auto graphs = enumerate_connected_graphs(3);
  REQUIRE(graphs.size() == 2);
  bool p3 = false, k3 = false;
  for (const Graph& g : graphs) {
    p3 |= isomorphic(g, make_path(3));
    k3 |= isomorphic(g, make_complete(3));
  }
  CHECK(p3);
  CHECK(k3);
}

TEST_CASE("enumeration yields no duplicates and only connected graphs") {
  std::set<std::string> seen;
  for (const Graph& g : enumerate_connected_graphs(6)) {
    CHECK(is_connected(g));
    CHECK(seen.insert(canonical_form(g)).second);
  }
}

TEST_CASE("canonical_form is invariant under relabeling") {
  std::mt19937 rng(987);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g(n);
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (rng() % 2) g.add_edge(u, v);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(g) == canonical_form(permute_graph(g, perm)));
  }
}

TEST_CASE("canonical_form separates non-isomorphic graphs") {
  CHECK(canonical_form(make_path(3)) != canonical_form(make_complete(3)));
  Graph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  CHECK(canonical_form(make_path(4)) != canonical_form(star));
  CHECK_THROWS_AS(canonical_form(Graph(11)), std::invalid_argument);
}

TEST_CASE("isomorphic agrees with the permutation oracle") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph a(n), b(n);
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < v; ++u) {
        if (rng() % 2) a.add_edge(u, v);
        if (rng() % 2) b.add_edge(u, v);
      }
    CHECK(isomorphic(a, b) == oracle::naive_isomorphic(a, b));
  }
  // and on a guaranteed-positive pair
  Graph c = make_cycle(6);
  std::vector<int> perm = {3, 5, 0, 2, 4, 1};
  CHECK(isomorphic(c, permute_graph(c, perm)));
}

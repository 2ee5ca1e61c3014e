#include <doctest.h>

#include "graphevo/rng.hpp"
#include "graphevo/sparse_graph.hpp"
#include "test_helpers.hpp"

using namespace graphevo;

TEST_CASE("add_edge stores the sorted pair") {
  SparseGraph g(5);
  g.add_edge(3, 1);
  CHECK(g.is_edge(1, 3));
  CHECK(g.is_edge(3, 1));
  CHECK(g.edge_count() == 1);
}

TEST_CASE("self-loops and out-of-range writes do nothing") {
  SparseGraph g(5);
  g.add_edge(2, 2);
  CHECK(g.edge_count() == 0);
  g.add_edge(7, 1);
  CHECK(g.edge_count() == 0);
  g.add_edge(-1, 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("remove_edge undoes add and tolerates junk") {
  SparseGraph g(5);
  g.add_edge(0, 1);
  g.remove_edge(1, 0);
  CHECK(!g.is_edge(0, 1));
  g.remove_edge(2, 3);  // absent
  CHECK(g.edge_count() == 0);
  g.remove_edge(-1, 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("flip_edge toggles") {
  SparseGraph g(5);
  g.flip_edge(2, 4);
  CHECK(g.is_edge(2, 4));
  g.flip_edge(0, 1);
  g.flip_edge(0, 1);
  CHECK(!g.is_edge(0, 1));
  g.flip_edge(5, 5);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("is_edge on empty graph and invalid reads") {
  SparseGraph g(5);
  for (int u = -1; u < 6; ++u) {
    for (int v = -1; v < 6; ++v) CHECK(!g.is_edge(u, v));
  }
  g.add_edge(1, 4);
  CHECK(g.is_edge(4, 1));
  CHECK(!g.is_edge(9, 2));
}

TEST_CASE("degree counts incident stored pairs") {
  SparseGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(0) == 1);
  SparseGraph iso(4);
  CHECK(iso.degree(2) == 0);
  CHECK(iso.degree(9) == 0);
  CHECK(iso.degree(-3) == 0);

  SparseGraph grid = test::grid_oracle(3, 3);
  CHECK(grid.degree(4) == 4);  // center of a 3x3 grid
}

TEST_CASE("edges() is sorted and consistent") {
  SparseGraph g(4);
  g.add_edge(3, 2);
  g.add_edge(0, 2);
  g.add_edge(1, 0);
  auto e = g.edges();
  REQUIRE(e.size() == 3);
  CHECK(e[0] == std::pair<int32_t, int32_t>{0, 1});
  CHECK(e[1] == std::pair<int32_t, int32_t>{0, 2});
  CHECK(e[2] == std::pair<int32_t, int32_t>{2, 3});
}

TEST_CASE("random operation sequences match a dense-matrix oracle") {
  Rng rng(2024);
  for (int round = 0; round < 50; ++round) {
    int n = 1 + static_cast<int>(rng.next_below(64));
    SparseGraph g(n);
    test::DenseGraphOracle oracle(n);
    for (int step = 0; step < 400; ++step) {
      // indices deliberately overshoot the valid range on both sides
      int64_t u = rng.next_below(n + 6) - 3;
      int64_t v = rng.next_below(n + 6) - 3;
      switch (rng.next_below(4)) {
        case 0: g.add_edge(u, v); oracle.add_edge(u, v); break;
        case 1: g.remove_edge(u, v); oracle.remove_edge(u, v); break;
        case 2: g.flip_edge(u, v); oracle.flip_edge(u, v); break;
        default:
          CHECK(g.is_edge(u, v) == oracle.is_edge(u, v));
          break;
      }
    }
    REQUIRE(g.edge_count() == oracle.edge_count());
    int64_t degree_sum = 0;
    for (int64_t u = 0; u < n; ++u) degree_sum += g.degree(u);
    CHECK(degree_sum == 2 * g.edge_count());
    for (auto [u, v] : g.edges()) {
      CHECK(u < v);
      CHECK(v < n);
      CHECK(u >= 0);
      CHECK(oracle.is_edge(u, v));
    }
  }
}

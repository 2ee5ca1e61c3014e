#include <algorithm>
#include <doctest.h>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "graphevo/dataset.hpp"
#include "test_helpers.hpp"

using namespace graphevo;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

// strip degree<=1 nodes once, as an induced subgraph
SparseGraph prune_leaves(const SparseGraph& g) {
  std::vector<int64_t> keep;
  for (int64_t v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) >= 2) keep.push_back(v);
  }
  std::map<int64_t, int64_t> relabel;
  for (size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<int64_t>(i);
  SparseGraph out(static_cast<int64_t>(keep.size()));
  for (auto [u, v] : g.edges()) {
    auto iu = relabel.find(u);
    auto iv = relabel.find(v);
    if (iu != relabel.end() && iv != relabel.end()) {
      out.add_edge(iu->second, iv->second);
    }
  }
  return out;
}

bool is_connected(const SparseGraph& g) {
  if (g.node_count() == 0) return true;
  auto adj = g.adjacency();
  std::vector<char> seen(static_cast<size_t>(g.node_count()), 0);
  std::vector<int64_t> stack{0};
  seen[0] = 1;
  int64_t visited = 1;
  while (!stack.empty()) {
    int64_t v = stack.back();
    stack.pop_back();
    for (int32_t u : adj[static_cast<size_t>(v)]) {
      if (!seen[static_cast<size_t>(u)]) {
        seen[static_cast<size_t>(u)] = 1;
        ++visited;
        stack.push_back(u);
      }
    }
  }
  return visited == g.node_count();
}

}  // namespace

TEST_CASE("grid dataset covers exactly the deduplicated side pairs") {
  Dataset ds = gen_grids(3, 9);
  CHECK(ds.records.size() == 28);
  std::set<int64_t> sizes;
  for (const auto& rec : ds.records) {
    sizes.insert(rec.graph.node_count());
    CHECK(rec.aux.empty());
  }
  CHECK(*sizes.begin() == 9);
  CHECK(*sizes.rbegin() == 81);

  CHECK(ds.train.size() == 22);  // 80% of 28, rounded
  CHECK(ds.test.size() == 6);

  Dataset with_width = gen_grids(3, 9, true);
  // the 3x4 record carries its width
  bool found = false;
  for (const auto& rec : with_width.records) {
    if (rec.graph.node_count() == 12 && rec.aux == std::vector<int64_t>{4}) {
      found = true;
    }
  }
  CHECK(found);

  CHECK_THROWS_AS(gen_grids(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(gen_grids(6, 5), std::invalid_argument);
}

TEST_CASE("3x3 grid has the hand-enumerated degree profile") {
  SparseGraph g = grid_graph(3, 3);
  CHECK(g.edge_count() == 12);
  std::map<int64_t, int> degree_counts;
  for (int64_t v = 0; v < 9; ++v) ++degree_counts[g.degree(v)];
  CHECK(degree_counts[2] == 4);
  CHECK(degree_counts[3] == 4);
  CHECK(degree_counts[4] == 1);
}

TEST_CASE("grid generator agrees with the pair-predicate oracle") {
  for (int h = 2; h <= 7; ++h) {
    for (int w = 2; w <= 7; ++w) {
      CHECK(grid_graph(h, w) == test::grid_oracle(h, w));
    }
  }
}

TEST_CASE("lobsters are trees that prune down to a path") {
  Rng rng(11);
  Dataset ds = gen_lobsters(40, 0.7, 0.7, 10, 100, &rng);
  REQUIRE(ds.records.size() == 40);
  for (const auto& rec : ds.records) {
    const SparseGraph& g = rec.graph;
    CHECK(g.node_count() >= 10);
    CHECK(g.node_count() <= 100);
    CHECK(g.edge_count() == g.node_count() - 1);
    CHECK(is_connected(g));

    SparseGraph core = prune_leaves(prune_leaves(g));
    CHECK(core.max_degree() <= 2);
    if (core.node_count() > 0) {
      CHECK(is_connected(core));
      CHECK(core.edge_count() == core.node_count() - 1);
    }
  }
}

TEST_CASE("zero attachment probability leaves bare backbones") {
  Rng rng(12);
  Dataset ds = gen_lobsters(10, 0.0, 0.0, 5, 100, &rng);
  for (const auto& rec : ds.records) {
    CHECK(rec.graph.max_degree() <= 2);
    CHECK(rec.graph.edge_count() == rec.graph.node_count() - 1);
  }
}

TEST_CASE("path dataset") {
  Rng rng(13);
  Dataset ds = gen_paths(20, 5, 9, rng);
  for (const auto& rec : ds.records) {
    const SparseGraph& g = rec.graph;
    CHECK(g.node_count() >= 5);
    CHECK(g.node_count() <= 9);
    CHECK(g.edge_count() == g.node_count() - 1);
    int endpoints = 0;
    for (int64_t v = 0; v < g.node_count(); ++v) {
      CHECK(g.degree(v) <= 2);
      endpoints += g.degree(v) == 1;
    }
    CHECK(endpoints == 2);
  }
  SparseGraph p5 = ds.records[0].graph;  // uniform sizes include 5 eventually
  CHECK(p5.edge_count() == p5.node_count() - 1);
}

TEST_CASE("dataset files round-trip with their split") {
  Dataset ds = gen_grids(3, 9, true);
  auto path = temp_file("graphevo_grids_test.txt");
  write_dataset(ds, path);
  Dataset back = read_dataset(path);
  REQUIRE(back.records.size() == ds.records.size());
  for (size_t i = 0; i < ds.records.size(); ++i) {
    CHECK(back.records[i].graph == ds.records[i].graph);
    CHECK(back.records[i].aux == ds.records[i].aux);
  }
  CHECK(back.train == ds.train);
  CHECK(back.test == ds.test);
  std::filesystem::remove(path);
  std::filesystem::remove(path.string() + ".split");
}

TEST_CASE("dataset parser rejects broken files") {
  auto path = temp_file("graphevo_bad_dataset.txt");
  auto write = [&](const std::string& text) {
    std::ofstream out(path);
    out << text;
  };

  write("g 3 0\ne 0 3\n");  // endpoint out of range
  CHECK_THROWS_AS(read_dataset(path), ParseError);
  write("g 3 0\ne 0 1\ne 1 0\n");  // duplicate edge
  CHECK_THROWS_AS(read_dataset(path), ParseError);
  write("e 0 1\n");  // edge before header
  CHECK_THROWS_AS(read_dataset(path), ParseError);
  write("g 3 2 7\n");  // aux count mismatch
  CHECK_THROWS_AS(read_dataset(path), ParseError);
  write("whatever\n");
  CHECK_THROWS_AS(read_dataset(path), ParseError);
  write("");  // empty file: empty dataset
  CHECK(read_dataset(path).records.empty());

  std::filesystem::remove(path);
  CHECK_THROWS(read_dataset(path));  // missing file
}

TEST_CASE("sample_batch draws without replacement when it can") {
  Rng rng(14);
  Dataset ds = gen_grids(3, 9);  // 22 train records
  auto batch = sample_batch(ds, true, 16, rng);
  REQUIRE(batch.size() == 16);
  std::set<int64_t> distinct;
  for (const auto& rec : batch) {
    distinct.insert(rec.graph.node_count() * 1000 + rec.graph.edge_count());
  }
  CHECK(distinct.size() == 16);  // all grid records differ in (n, edges)

  // batch of the whole split is a permutation of it
  auto all = sample_batch(ds, true, 22, rng);
  std::multiset<int64_t> seen, expect;
  for (const auto& rec : all) seen.insert(rec.graph.node_count());
  for (int32_t idx : ds.train) {
    expect.insert(ds.records[static_cast<size_t>(idx)].graph.node_count());
  }
  CHECK(seen == expect);

  // oversampling falls back to replacement
  Rng rng2(15);
  Dataset tiny = gen_grids(3, 4);  // 3 records, 2 train
  auto big = sample_batch(tiny, true, 10, rng2);
  CHECK(big.size() == 10);

  // reproducibility
  Rng a(16), b(16);
  auto ba = sample_batch(ds, true, 16, a);
  auto bb = sample_batch(ds, true, 16, b);
  for (size_t i = 0; i < ba.size(); ++i) {
    CHECK(ba[i].graph == bb[i].graph);
  }

  Dataset unsplit;
  unsplit.records.push_back({SparseGraph(3), {}});
  CHECK_THROWS_AS(sample_batch(unsplit, true, 4, rng), std::invalid_argument);
}

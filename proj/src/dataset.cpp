#include "graphevo/dataset.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "graphevo/textio.hpp"

namespace graphevo {

SparseGraph grid_graph(int height, int width) {
  SparseGraph g(static_cast<int64_t>(height) * width);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      int64_t v = static_cast<int64_t>(r) * width + c;
      if (c + 1 < width) g.add_edge(v, v + 1);
      if (r + 1 < height) g.add_edge(v, v + width);
    }
  }
  return g;
}

Dataset gen_grids(int min_side, int max_side, bool with_width) {
  if (min_side < 2 || min_side > max_side) {
    throw std::invalid_argument("grid sides must satisfy 2 <= min <= max");
  }
  Dataset ds;
  for (int h = min_side; h <= max_side; ++h) {
    for (int w = h; w <= max_side; ++w) {
      DatasetRecord rec;
      rec.graph = grid_graph(h, w);
      if (with_width) rec.aux = {w};
      ds.records.push_back(std::move(rec));
    }
  }
  assign_split(ds);
  return ds;
}

namespace {

SparseGraph sample_lobster(double p1, double p2, int min_nodes, int max_nodes,
                           Rng& rng) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    int64_t backbone = 5 + rng.next_below(36);  // 5..40 nodes
    // collect edges against a growing node counter, then build the graph
    std::vector<std::pair<int64_t, int64_t>> edges;
    int64_t next_node = backbone;
    std::vector<int64_t> children;
    for (int64_t b = 0; b + 1 < backbone; ++b) edges.emplace_back(b, b + 1);
    for (int64_t b = 0; b < backbone; ++b) {
      for (int trial = 0; trial < 2; ++trial) {
        if (rng.next_bool(p1)) {
          edges.emplace_back(b, next_node);
          children.push_back(next_node++);
        }
      }
    }
    for (int64_t c : children) {
      for (int trial = 0; trial < 2; ++trial) {
        if (rng.next_bool(p2)) {
          edges.emplace_back(c, next_node++);
        }
      }
    }
    if (next_node < min_nodes || next_node > max_nodes) continue;
    SparseGraph g(next_node);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }
  throw std::runtime_error("lobster size bounds are unsatisfiable");
}

}  // namespace

Dataset gen_lobsters(int count, double p1, double p2, int min_nodes,
                     int max_nodes, Rng* rng) {
  if (count < 1) throw std::invalid_argument("lobster count must be >= 1");
  Rng local(0);
  Rng& r = rng ? *rng : local;
  Dataset ds;
  for (int i = 0; i < count; ++i) {
    ds.records.push_back({sample_lobster(p1, p2, min_nodes, max_nodes, r), {}});
  }
  assign_split(ds);
  return ds;
}

Dataset gen_paths(int count, int min_nodes, int max_nodes, Rng& rng) {
  if (count < 1 || min_nodes < 1 || min_nodes > max_nodes) {
    throw std::invalid_argument("bad path-dataset bounds");
  }
  Dataset ds;
  for (int i = 0; i < count; ++i) {
    int64_t n = min_nodes + rng.next_below(max_nodes - min_nodes + 1);
    SparseGraph g(n);
    for (int64_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    ds.records.push_back({std::move(g), {}});
  }
  assign_split(ds);
  return ds;
}

void assign_split(Dataset& ds, double train_fraction, uint64_t seed) {
  const size_t n = ds.records.size();
  std::vector<int32_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = static_cast<int32_t>(i);
  Rng rng = Rng::derive(seed, 0x73706c6974ULL);  // split stream
  for (size_t i = 0; i + 1 < n; ++i) {
    size_t j = i + static_cast<size_t>(
                       rng.next_below(static_cast<int64_t>(n - i)));
    std::swap(order[i], order[j]);
  }
  size_t train_count =
      static_cast<size_t>(std::floor(static_cast<double>(n) * train_fraction + 0.5));
  ds.train.assign(order.begin(), order.begin() + static_cast<long>(train_count));
  ds.test.assign(order.begin() + static_cast<long>(train_count), order.end());
}

void write_dataset(const Dataset& ds, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (const DatasetRecord& rec : ds.records) {
    out << "g " << rec.graph.node_count() << ' ' << rec.aux.size();
    for (int64_t a : rec.aux) out << ' ' << a;
    out << '\n';
    for (auto [u, v] : rec.graph.edges()) {
      out << "e " << u << ' ' << v << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());

  std::ofstream split(path.string() + ".split");
  if (!split) {
    throw std::runtime_error("cannot write " + path.string() + ".split");
  }
  for (int32_t i : ds.train) split << "train " << i << '\n';
  for (int32_t i : ds.test) split << "test " << i << '\n';
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Dataset read_dataset(const std::filesystem::path& path) {
  Dataset ds;
  LineCursor cur(slurp(path));
  while (!cur.done()) {
    auto tokens = split_ws(cur.take());
    int line = cur.line_number();
    if (tokens[0] == "g") {
      if (tokens.size() < 3) throw ParseError("malformed graph header", line);
      int64_t n = parse_i64(tokens[1], line);
      int64_t aux_count = parse_i64(tokens[2], line);
      if (n < 0 || aux_count < 0 ||
          tokens.size() != 3 + static_cast<size_t>(aux_count)) {
        throw ParseError("malformed graph header", line);
      }
      DatasetRecord rec;
      rec.graph = SparseGraph(n);
      for (int64_t k = 0; k < aux_count; ++k) {
        rec.aux.push_back(parse_i64(tokens[3 + static_cast<size_t>(k)], line));
      }
      ds.records.push_back(std::move(rec));
    } else if (tokens[0] == "e") {
      if (ds.records.empty()) {
        throw ParseError("edge before any graph header", line);
      }
      if (tokens.size() != 3) throw ParseError("malformed edge line", line);
      SparseGraph& g = ds.records.back().graph;
      int64_t u = parse_i64(tokens[1], line);
      int64_t v = parse_i64(tokens[2], line);
      if (u < 0 || v < 0 || u >= g.node_count() || v >= g.node_count() ||
          u == v) {
        throw ParseError("edge endpoint out of range", line);
      }
      if (g.is_edge(u, v)) throw ParseError("duplicate edge", line);
      g.add_edge(u, v);
    } else {
      throw ParseError("expected a 'g' or 'e' line", line);
    }
  }

  std::filesystem::path split_path = path.string() + ".split";
  if (std::filesystem::exists(split_path)) {
    LineCursor sc(slurp(split_path));
    std::vector<int> seen(ds.records.size(), 0);
    while (!sc.done()) {
      auto tokens = split_ws(sc.take());
      int line = sc.line_number();
      if (tokens.size() != 2 || (tokens[0] != "train" && tokens[0] != "test")) {
        throw ParseError("expected 'train <idx>' or 'test <idx>'", line);
      }
      int64_t idx = parse_i64(tokens[1], line);
      if (idx < 0 || idx >= static_cast<int64_t>(ds.records.size())) {
        throw ParseError("split index out of range", line);
      }
      if (seen[static_cast<size_t>(idx)]++) {
        throw ParseError("split index repeated", line);
      }
      (tokens[0] == "train" ? ds.train : ds.test)
          .push_back(static_cast<int32_t>(idx));
    }
    for (size_t i = 0; i < seen.size(); ++i) {
      if (!seen[i]) {
        throw ParseError("record " + std::to_string(i) + " missing from split");
      }
    }
  } else {
    for (size_t i = 0; i < ds.records.size(); ++i) {
      ds.train.push_back(static_cast<int32_t>(i));
    }
  }
  return ds;
}

std::vector<DatasetRecord> sample_batch(const Dataset& ds, bool from_train,
                                        int batch_size, Rng& rng) {
  const std::vector<int32_t>& split = from_train ? ds.train : ds.test;
  if (split.empty()) throw std::invalid_argument("empty split");
  std::vector<DatasetRecord> batch;
  batch.reserve(static_cast<size_t>(batch_size));
  if (static_cast<int>(split.size()) < batch_size) {
    for (int i = 0; i < batch_size; ++i) {
      int64_t j = rng.next_below(static_cast<int64_t>(split.size()));
      batch.push_back(ds.records[static_cast<size_t>(split[static_cast<size_t>(j)])]);
    }
    return batch;
  }
  std::vector<int32_t> pool = split;
  for (int i = 0; i < batch_size; ++i) {
    int64_t j = i + rng.next_below(static_cast<int64_t>(pool.size()) - i);
    std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
    batch.push_back(ds.records[static_cast<size_t>(pool[static_cast<size_t>(i)])]);
  }
  return batch;
}

}  // namespace graphevo

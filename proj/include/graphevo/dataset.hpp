#ifndef GRAPHEVO_DATASET_HPP
#define GRAPHEVO_DATASET_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

#include "graphevo/rng.hpp"
#include "graphevo/sparse_graph.hpp"

namespace graphevo {

/// One reference example: a graph plus the auxiliary integer inputs an
/// algorithm receives alongside the node count.
struct DatasetRecord {
  SparseGraph graph;
  std::vector<int64_t> aux;
};

struct Dataset {
  std::vector<DatasetRecord> records;
  std::vector<int32_t> train;
  std::vector<int32_t> test;
};

/// Row-major h x w grid: node r*w+c, edges to the right and downward
/// neighbors.
SparseGraph grid_graph(int height, int width);

/// One record per unordered side pair (h, w) with min_side <= h <= w <=
/// max_side; the h <= w constraint removes isomorphic duplicates. With
/// `with_width`, each record carries aux = [w]. Throws std::invalid_argument
/// on bad bounds.
Dataset gen_grids(int min_side = 3, int max_side = 9, bool with_width = false);

/// Random lobsters: a backbone path of 5..40 nodes; each backbone node gets
/// two independent Bernoulli(p1) child attachments, each child two
/// Bernoulli(p2) leaf attachments. Sizes outside [min_nodes, max_nodes] are
/// rejected and resampled.
Dataset gen_lobsters(int count, double p1 = 0.7, double p2 = 0.7,
                     int min_nodes = 10, int max_nodes = 100,
                     Rng* rng = nullptr);

/// Path graphs with uniformly sampled sizes; the fast toy family.
Dataset gen_paths(int count, int min_nodes, int max_nodes, Rng& rng);

/// Deterministic seeded-shuffle split with the given train fraction.
void assign_split(Dataset& ds, double train_fraction = 0.8, uint64_t seed = 0);

/// Line-oriented dataset file plus a `<path>.split` sidecar of record
/// indices; see docs/formats.md. Reading validates node counts, edge ranges,
/// duplicate edges, and (when the sidecar exists) that the split partitions
/// the records.
void write_dataset(const Dataset& ds, const std::filesystem::path& path);
Dataset read_dataset(const std::filesystem::path& path);

/// B records drawn uniformly without replacement from the chosen split; if
/// the split holds fewer than B records, draws are with replacement.
std::vector<DatasetRecord> sample_batch(const Dataset& ds, bool from_train,
                                        int batch_size, Rng& rng);

}  // namespace graphevo

#endif

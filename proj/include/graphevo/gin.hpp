#ifndef GRAPHEVO_GIN_HPP
#define GRAPHEVO_GIN_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "graphevo/sparse_graph.hpp"

namespace graphevo {

struct GinConfig {
  int rounds = 3;
  int embed_dim = 35;
  int input_dim = 20;  // degree one-hot, clamped to [0, input_dim-1]
};

/// A randomly initialized, untrained message-passing feature extractor.
/// Each round applies a two-layer MLP (no biases, rectifier between the
/// layers) to the node state plus its degree-normalized neighbor sum. The
/// parameters are a pure function of the seed.
struct GinParams {
  GinConfig cfg;
  uint64_t seed = 0;
  // per round: first layer (d_in x embed_dim), second (embed_dim x embed_dim)
  std::vector<std::pair<Eigen::MatrixXd, Eigen::MatrixXd>> layers;
};

GinParams init_gin(uint64_t seed, const GinConfig& cfg = {});

/// Graph embedding: start from one-hot encoded clamped degrees, run the
/// message-passing rounds with sqrt-degree normalization of the aggregated
/// messages, and sum the final node states. Empty graphs embed to zero.
Eigen::VectorXd embed_graph(const GinParams& gin, const SparseGraph& g);

}  // namespace graphevo

#endif

#include "graphevo/gin.hpp"

#include <cmath>

#include "graphevo/rng.hpp"

namespace graphevo {

namespace {

// Glorot-uniform fill, entries drawn row-major from the stream.
Eigen::MatrixXd glorot(int rows, int cols, Rng& rng) {
  Eigen::MatrixXd w(rows, cols);
  double a = std::sqrt(6.0 / (rows + cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      w(r, c) = (2.0 * rng.next_double() - 1.0) * a;
    }
  }
  return w;
}

}  // namespace

GinParams init_gin(uint64_t seed, const GinConfig& cfg) {
  GinParams gin;
  gin.cfg = cfg;
  gin.seed = seed;
  Rng rng = Rng::derive(seed, 0x6769'6e00ULL);  // dedicated stream per seed
  for (int r = 0; r < cfg.rounds; ++r) {
    int d_in = r == 0 ? cfg.input_dim : cfg.embed_dim;
    Eigen::MatrixXd w1 = glorot(d_in, cfg.embed_dim, rng);
    Eigen::MatrixXd w2 = glorot(cfg.embed_dim, cfg.embed_dim, rng);
    gin.layers.emplace_back(std::move(w1), std::move(w2));
  }
  return gin;
}

Eigen::VectorXd embed_graph(const GinParams& gin, const SparseGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  const int d = gin.cfg.embed_dim;
  if (n == 0) return Eigen::VectorXd::Zero(d);

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, gin.cfg.input_dim);
  for (Eigen::Index v = 0; v < n; ++v) {
    int64_t deg = g.degree(v);
    int bin = static_cast<int>(
        deg < gin.cfg.input_dim ? deg : gin.cfg.input_dim - 1);
    h(v, bin) = 1.0;
  }

  const auto edges = g.edges();
  Eigen::VectorXd inv_sqrt_deg(n);
  for (Eigen::Index v = 0; v < n; ++v) {
    int64_t deg = g.degree(v);
    inv_sqrt_deg(v) = 1.0 / std::sqrt(static_cast<double>(deg > 0 ? deg : 1));
  }

  for (const auto& [w1, w2] : gin.layers) {
    Eigen::MatrixXd msg = Eigen::MatrixXd::Zero(n, h.cols());
    for (auto [u, v] : edges) {
      msg.row(u) += h.row(v);
      msg.row(v) += h.row(u);
    }
    msg.array().colwise() *= inv_sqrt_deg.array();
    h = ((h + msg) * w1).cwiseMax(0.0) * w2;
  }
  return h.colwise().sum().transpose();
}

}  // namespace graphevo

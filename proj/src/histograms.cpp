#include "graphevo/histograms.hpp"

#include <algorithm>
#include <cmath>

namespace graphevo {

namespace {

Eigen::VectorXd normalize_counts(Eigen::VectorXd counts) {
  double total = counts.sum();
  if (total > 0.0) counts /= total;
  return counts;
}

}  // namespace

Eigen::VectorXd degree_histogram(const SparseGraph& g, int bins) {
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(bins);
  for (int64_t v = 0; v < g.node_count(); ++v) {
    int64_t deg = g.degree(v);
    int bin = static_cast<int>(deg < bins ? deg : bins - 1);
    counts(bin) += 1.0;
  }
  return normalize_counts(std::move(counts));
}

Eigen::VectorXd degree_histogram(const SparseGraph& g) {
  return degree_histogram(g, static_cast<int>(g.max_degree()) + 1);
}

std::vector<double> local_clustering(const SparseGraph& g) {
  const auto adj = g.adjacency();
  std::vector<double> coeffs(adj.size(), 0.0);
  for (size_t v = 0; v < adj.size(); ++v) {
    const auto& nbrs = adj[v];
    size_t deg = nbrs.size();
    if (deg < 2) continue;
    int64_t links = 0;
    for (size_t a = 0; a < deg; ++a) {
      for (size_t b = a + 1; b < deg; ++b) {
        links += g.is_edge(nbrs[a], nbrs[b]);
      }
    }
    coeffs[v] = 2.0 * static_cast<double>(links) /
                (static_cast<double>(deg) * static_cast<double>(deg - 1));
  }
  return coeffs;
}

Eigen::VectorXd clustering_histogram(const SparseGraph& g, int bins) {
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(bins);
  for (double c : local_clustering(g)) {
    int bin = static_cast<int>(c * bins);
    counts(std::clamp(bin, 0, bins - 1)) += 1.0;
  }
  return normalize_counts(std::move(counts));
}

Eigen::VectorXd normalized_laplacian_eigenvalues(const SparseGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::VectorXd inv_sqrt_deg(n);
  for (Eigen::Index v = 0; v < n; ++v) {
    int64_t deg = g.degree(v);
    inv_sqrt_deg(v) = deg > 0 ? 1.0 / std::sqrt(static_cast<double>(deg)) : 0.0;
  }
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index v = 0; v < n; ++v) {
    if (g.degree(v) > 0) lap(v, v) = 1.0;
  }
  for (auto [u, v] : g.edges()) {
    double w = inv_sqrt_deg(u) * inv_sqrt_deg(v);
    lap(u, v) = -w;
    lap(v, u) = -w;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  return solver.eigenvalues();
}

Eigen::VectorXd spectrum_histogram(const SparseGraph& g, int bins) {
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(bins);
  Eigen::VectorXd eigenvalues = normalized_laplacian_eigenvalues(g);
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    int bin = static_cast<int>(eigenvalues(i) / 2.0 * bins);
    counts(std::clamp(bin, 0, bins - 1)) += 1.0;
  }
  return normalize_counts(std::move(counts));
}

}  // namespace graphevo

#ifndef GRAPHEVO_HISTOGRAMS_HPP
#define GRAPHEVO_HISTOGRAMS_HPP

#include <Eigen/Dense>
#include <vector>

#include "graphevo/sparse_graph.hpp"

namespace graphevo {

inline constexpr int kClusteringBins = 100;
inline constexpr int kSpectrumBins = 200;

/// Degree counts over bins 0..bins-1 (degrees past the top clamp into the
/// last bin), normalized to sum 1. The one-argument form uses the graph's own
/// maximum degree; callers comparing several graphs must pass a shared bin
/// count.
Eigen::VectorXd degree_histogram(const SparseGraph& g, int bins);
Eigen::VectorXd degree_histogram(const SparseGraph& g);

/// Per-node local clustering coefficients (0 for degree < 2).
std::vector<double> local_clustering(const SparseGraph& g);

/// Clustering coefficients binned over [0, 1], normalized to sum 1.
Eigen::VectorXd clustering_histogram(const SparseGraph& g,
                                     int bins = kClusteringBins);

/// Eigenvalues of the symmetric-normalized Laplacian (pseudo-inverse degree
/// convention: isolated nodes contribute eigenvalue 0), ascending.
Eigen::VectorXd normalized_laplacian_eigenvalues(const SparseGraph& g);

/// Laplacian spectrum binned over [0, 2], normalized to sum 1.
Eigen::VectorXd spectrum_histogram(const SparseGraph& g,
                                   int bins = kSpectrumBins);

}  // namespace graphevo

#endif

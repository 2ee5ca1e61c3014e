#ifndef GRAPHEVO_METRICS_HPP
#define GRAPHEVO_METRICS_HPP

#include <span>
#include <string>

#include "graphevo/sparse_graph.hpp"

namespace graphevo {

/// Squared-MMD statistics between two graph sets over degree, clustering,
/// and Laplacian-spectrum histograms (Gaussian kernel, sigma = 1). Absolute
/// values depend on the documented binning and kernel; orderings and zeros
/// are the meaningful part.
struct MetricReport {
  double degree_mmd = 0.0;
  double clustering_mmd = 0.0;
  double spectral_mmd = 0.0;
  int ref_count = 0;
  int gen_count = 0;
};

/// Degree bins span 0..max over both sets; clustering uses 100 bins on
/// [0, 1]; the spectrum uses 200 bins on [0, 2].
MetricReport eval_sets(std::span<const SparseGraph> ref,
                       std::span<const SparseGraph> gen);

std::string format_report_table(const MetricReport& report);
std::string format_report_kv(const MetricReport& report);

}  // namespace graphevo

#endif

#include "graphevo/metrics.hpp"

#include <algorithm>
#include <vector>

#include "graphevo/histograms.hpp"
#include "graphevo/mmd.hpp"
#include "graphevo/textio.hpp"

namespace graphevo {

MetricReport eval_sets(std::span<const SparseGraph> ref,
                       std::span<const SparseGraph> gen) {
  MetricReport report;
  report.ref_count = static_cast<int>(ref.size());
  report.gen_count = static_cast<int>(gen.size());

  int64_t max_deg = 0;
  for (const SparseGraph& g : ref) max_deg = std::max(max_deg, g.max_degree());
  for (const SparseGraph& g : gen) max_deg = std::max(max_deg, g.max_degree());
  const int degree_bins = static_cast<int>(max_deg) + 1;

  auto embed_all = [](std::span<const SparseGraph> graphs, auto&& fn) {
    std::vector<Eigen::VectorXd> out;
    out.reserve(graphs.size());
    for (const SparseGraph& g : graphs) out.push_back(fn(g));
    return out;
  };

  auto deg = [degree_bins](const SparseGraph& g) {
    return degree_histogram(g, degree_bins);
  };
  auto clus = [](const SparseGraph& g) { return clustering_histogram(g); };
  auto spec = [](const SparseGraph& g) { return spectrum_histogram(g); };

  report.degree_mmd =
      mmd2_gaussian(embed_all(ref, deg), embed_all(gen, deg), 1.0);
  report.clustering_mmd =
      mmd2_gaussian(embed_all(ref, clus), embed_all(gen, clus), 1.0);
  report.spectral_mmd =
      mmd2_gaussian(embed_all(ref, spec), embed_all(gen, spec), 1.0);
  return report;
}

std::string format_report_table(const MetricReport& report) {
  std::string out;
  out += "statistic    mmd2\n";
  out += "degree       " + fmt_double(report.degree_mmd) + "\n";
  out += "clustering   " + fmt_double(report.clustering_mmd) + "\n";
  out += "spectral     " + fmt_double(report.spectral_mmd) + "\n";
  out += "(reference graphs: " + std::to_string(report.ref_count) +
         ", generated graphs: " + std::to_string(report.gen_count) + ")\n";
  return out;
}

std::string format_report_kv(const MetricReport& report) {
  std::string out;
  out += "degree_mmd = " + fmt_double(report.degree_mmd) + "\n";
  out += "clustering_mmd = " + fmt_double(report.clustering_mmd) + "\n";
  out += "spectral_mmd = " + fmt_double(report.spectral_mmd) + "\n";
  out += "ref_count = " + std::to_string(report.ref_count) + "\n";
  out += "gen_count = " + std::to_string(report.gen_count) + "\n";
  return out;
}

}  // namespace graphevo

#include "graphevo/loss.hpp"

#include "graphevo/histograms.hpp"
#include "graphevo/mmd.hpp"

namespace graphevo {

Embedder::Embedder(const LossConfig& cfg, const GinParams* gin,
                   std::span<const DatasetRecord> refs)
    : cfg_(cfg), gin_(gin) {
  if (cfg_.extractor == Extractor::degree_hist) {
    int64_t max_deg = 0;
    for (const DatasetRecord& rec : refs) {
      max_deg = std::max(max_deg, rec.graph.max_degree());
    }
    degree_bins_ = static_cast<int>(max_deg) + 1;
  }
  ref_embeddings_.reserve(refs.size());
  for (const DatasetRecord& rec : refs) {
    ref_embeddings_.push_back(embed(rec.graph));
  }
}

Eigen::VectorXd Embedder::embed(const SparseGraph& g) const {
  switch (cfg_.extractor) {
    case Extractor::degree_hist: return degree_histogram(g, degree_bins_);
    case Extractor::clustering_hist: return clustering_histogram(g);
    case Extractor::spectrum_hist: return spectrum_histogram(g);
    case Extractor::gin: break;
  }
  return embed_graph(*gin_, g);
}

double individual_loss(Individual& ind, std::span<const DatasetRecord> batch,
                       const Embedder& embedder, const LossConfig& cfg,
                       Rng& rng, const Limits& limits) {
  std::vector<Eigen::VectorXd> generated;
  generated.reserve(batch.size());
  for (const DatasetRecord& rec : batch) {
    SparseGraph g =
        run_individual(ind, rec.graph.node_count(), rec.aux, rng, limits);
    generated.push_back(embedder.embed(g));
  }
  double mmd = mmd2_gaussian(generated, embedder.reference_embeddings(),
                             cfg.sigma);
  return mmd + cfg.reg_weight * static_cast<double>(ind.node_count());
}

double individual_loss(Individual& ind, std::span<const DatasetRecord> batch,
                       const GinParams& gin, const LossConfig& cfg, Rng& rng,
                       const Limits& limits) {
  Embedder embedder(cfg, &gin, batch);
  return individual_loss(ind, batch, embedder, cfg, rng, limits);
}

}  // namespace graphevo

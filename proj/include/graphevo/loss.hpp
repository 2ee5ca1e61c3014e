#ifndef GRAPHEVO_LOSS_HPP
#define GRAPHEVO_LOSS_HPP

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "graphevo/dataset.hpp"
#include "graphevo/gin.hpp"
#include "graphevo/search_config.hpp"
#include "graphevo/vm.hpp"

namespace graphevo {

/// Feature extractor bound to one reference batch. Reference embeddings are
/// computed once and reused across every individual scored on the batch;
/// cached and recomputed embeddings are bit-identical because both go through
/// the same pure embed() path. For the degree extractor the bin count is
/// pinned to the reference batch (generated degrees clamp into the top bin).
class Embedder {
 public:
  Embedder(const LossConfig& cfg, const GinParams* gin,
           std::span<const DatasetRecord> refs);

  Eigen::VectorXd embed(const SparseGraph& g) const;
  const std::vector<Eigen::VectorXd>& reference_embeddings() const {
    return ref_embeddings_;
  }

 private:
  LossConfig cfg_;
  const GinParams* gin_;
  int degree_bins_ = 1;
  std::vector<Eigen::VectorXd> ref_embeddings_;
};

/// Score one individual on a reference batch: run it once per reference
/// (PRNG state flowing across the runs), embed the generated graphs, and
/// return MMD^2 against the reference embeddings plus the per-node
/// regularization term.
double individual_loss(Individual& ind, std::span<const DatasetRecord> batch,
                       const Embedder& embedder, const LossConfig& cfg,
                       Rng& rng, const Limits& limits = {});

/// Convenience form that builds the per-batch embedder internally.
double individual_loss(Individual& ind, std::span<const DatasetRecord> batch,
                       const GinParams& gin, const LossConfig& cfg, Rng& rng,
                       const Limits& limits = {});

}  // namespace graphevo

#endif

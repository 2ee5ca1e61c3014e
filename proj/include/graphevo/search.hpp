#ifndef GRAPHEVO_SEARCH_HPP
#define GRAPHEVO_SEARCH_HPP

#include <functional>
#include <vector>

#include "graphevo/dataset.hpp"
#include "graphevo/gin.hpp"
#include "graphevo/mutation.hpp"
#include "graphevo/search_config.hpp"
#include "graphevo/tournament.hpp"

namespace graphevo {

struct Scored {
  Individual ind;
  double loss = 0.0;
};

struct GenerationStats {
  int64_t generation = 0;
  double temperature = 0.0;
  double best_loss = 0.0;
  double mean_loss = 0.0;
  int64_t best_nodes = 0;
};

struct SearchState {
  int64_t generation = 0;
  std::vector<Scored> population;
  Scored best;                  // lowest per-generation loss seen so far
  int64_t best_generation = -1; // -1: nothing evaluated yet
  Rng rng;                      // coordinator stream (batchesic, selection, mutation)
  std::vector<GenerationStats> history;
};

/// Population of empty algorithms plus the coordinator stream.
SearchState init_search_state(const SearchConfig& cfg);

/// One generational step: sample a fresh reference batch, score everyone on
/// it (a parallel map with per-slot PRNG streams derived from (master seed,
/// generation, slot)), copy the elites, fill the rest with mutated tournament
/// winners, and advance the generation counter.
void evolve_generation(SearchState& state, const Dataset& dataset,
                       const GinParams& gin, const SearchConfig& cfg);

struct SearchHooks {
  /// Called after every generation with the updated state.
  std::function<void(const SearchState&)> on_generation;
};

struct SearchResult {
  Individual best;
  double best_loss = 0.0;
  int64_t best_generation = -1;
  std::vector<GenerationStats> history;
};

/// Loop evolve_generation until the generation or wall-clock budget runs out.
SearchResult run_search(const SearchConfig& cfg, const Dataset& dataset,
                        const SearchHooks& hooks = {});

/// Continue from a restored state (bit-identical to never having stopped).
SearchResult run_search_from(SearchState& state, const SearchConfig& cfg,
                             const Dataset& dataset,
                             const SearchHooks& hooks = {});

}  // namespace graphevo

#endif

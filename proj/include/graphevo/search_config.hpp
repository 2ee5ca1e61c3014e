#ifndef GRAPHEVO_SEARCH_CONFIG_HPP
#define GRAPHEVO_SEARCH_CONFIG_HPP

#include <cstdint>

#include "graphevo/code_tree.hpp"

namespace graphevo {

enum class Extractor { gin, degree_hist, clustering_hist, spectrum_hist };

/// Loss = kernel MMD^2 between embedding sets + reg_weight per code node.
struct LossConfig {
  double sigma = 1.0;
  double reg_weight = 1e-8;
  Extractor extractor = Extractor::gin;
};

/// Relative sampling weights of the six mutation kinds.
struct MutationRates {
  double insert = 1.0;
  double knockout = 3.0;
  double op_change = 1.0;
  double param_change = 2.0;
  double randomize = 1.0;
  double noop = 1.0;

  double total() const {
    return insert + knockout + op_change + param_change + randomize + noop;
  }
};

struct SearchConfig {
  int population_size = 1000;
  int tournament_size = 4;
  int elite_count = 10;
  double temperature_initial = 10.0;
  double temperature_decay = 0.9998;  // per generation
  int batch_size = 16;

  Limits limits{};  // register files + 50-node cap
  LossConfig loss{};

  MutationRates rates{};
  double if_insert_prob = 0.2;
  double int_step_sigma = 1.0;    // Brownian step for registers and int imms
  double float_step_sigma = 0.1;  // Brownian step for float imms
  int int_imm_range = 5;          // fresh int immediates ~ U[-range, range]
  double float_imm_range = 1.0;   // fresh float immediates ~ U[-range, range]

  int64_t max_generations = 1000000;
  double time_budget_sec = 0.0;  // 0 = no wall-clock budget
  uint64_t master_seed = 0;
  uint64_t gin_seed = 1;
  int threads = 1;  // 0 = hardware concurrency
};

}  // namespace graphevo

#endif

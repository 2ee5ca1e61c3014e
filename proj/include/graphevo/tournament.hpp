#ifndef GRAPHEVO_TOURNAMENT_HPP
#define GRAPHEVO_TOURNAMENT_HPP

#include <span>

#include "graphevo/rng.hpp"
#include "graphevo/search_config.hpp"

namespace graphevo {

/// Exponential annealing schedule: temperature_initial * decay^generation.
double temperature(int64_t generation, const SearchConfig& cfg);

/// Sample the winner among tournament contestants: index i wins with
/// probability exp(-l_i / T) / sum_j exp(-l_j / T), computed with the minimum
/// loss shifted out for numerical stability. T = 0 degenerates to a uniform
/// draw over the argmin set.
int tournament_select(std::span<const double> losses, double T, Rng& rng);

/// Draw `tournament_size` distinct contestants uniformly from the population
/// and run the stochastic tournament among them. Returns a population index.
int select_parent(std::span<const double> population_losses,
                  int tournament_size, double T, Rng& rng);

}  // namespace graphevo

#endif

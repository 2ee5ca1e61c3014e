#include "graphevo/tournament.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace graphevo {

double temperature(int64_t generation, const SearchConfig& cfg) {
  return cfg.temperature_initial *
         std::pow(cfg.temperature_decay, static_cast<double>(generation));
}

int tournament_select(std::span<const double> losses, double T, Rng& rng) {
  const size_t n = losses.size();
  double min_loss = *std::min_element(losses.begin(), losses.end());

  if (T <= 0.0) {
    // uniform over the best-performing contestants
    size_t ties = 0;
    for (double l : losses) ties += l == min_loss;
    int64_t pick = rng.next_below(static_cast<int64_t>(ties));
    for (size_t i = 0; i < n; ++i) {
      if (losses[i] == min_loss && pick-- == 0) return static_cast<int>(i);
    }
    return 0;
  }

  double total = 0.0;
  std::vector<double> weights(n);
  for (size_t i = 0; i < n; ++i) {
    weights[i] = std::exp(-(losses[i] - min_loss) / T);
    total += weights[i];
  }
  double u = rng.next_double() * total;
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) {
    acc += weights[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(n) - 1;
}

int select_parent(std::span<const double> population_losses,
                  int tournament_size, double T, Rng& rng) {
  const int64_t pop = static_cast<int64_t>(population_losses.size());
  const int k = static_cast<int>(
      std::min<int64_t>(tournament_size, pop));

  // partial Fisher-Yates over the index range: k distinct contestants
  static thread_local std::vector<int> scratch;
  scratch.resize(static_cast<size_t>(pop));
  for (int64_t i = 0; i < pop; ++i) scratch[static_cast<size_t>(i)] = static_cast<int>(i);
  std::vector<double> losses(static_cast<size_t>(k));
  std::vector<int> contestants(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    int64_t j = i + rng.next_below(pop - i);
    std::swap(scratch[static_cast<size_t>(i)], scratch[static_cast<size_t>(j)]);
    contestants[static_cast<size_t>(i)] = scratch[static_cast<size_t>(i)];
    losses[static_cast<size_t>(i)] =
        population_losses[static_cast<size_t>(scratch[static_cast<size_t>(i)])];
  }
  return contestants[static_cast<size_t>(tournament_select(losses, T, rng))];
}

}  // namespace graphevo

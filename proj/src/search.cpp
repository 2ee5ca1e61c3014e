#include "graphevo/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "graphevo/loss.hpp"
#include "graphevo/parallel.hpp"

namespace graphevo {

SearchState init_search_state(const SearchConfig& cfg) {
  if (cfg.population_size <= cfg.elite_count || cfg.elite_count < 0 ||
      cfg.tournament_size < 1) {
    throw std::invalid_argument("population/tournament configuration invalid");
  }
  SearchState state;
  state.population.assign(static_cast<size_t>(cfg.population_size),
                          Scored{make_empty_individual(), 0.0});
  state.rng = Rng::derive(cfg.master_seed, 0x636f6f7264ULL);  // coordinator
  return state;
}

void evolve_generation(SearchState& state, const Dataset& dataset,
                       const GinParams& gin, const SearchConfig& cfg) {
  const int pop = static_cast<int>(state.population.size());

  // one shared batch per generation keeps losses comparable within the round
  std::vector<DatasetRecord> batch =
      sample_batch(dataset, true, cfg.batch_size, state.rng);
  Embedder embedder(cfg.loss, &gin, batch);

  parallel_for(pop, cfg.threads, [&](int64_t slot) {
    Rng eval_rng = Rng::derive(cfg.master_seed,
                               static_cast<uint64_t>(state.generation) + 1,
                               static_cast<uint64_t>(slot));
    Scored& entry = state.population[static_cast<size_t>(slot)];
    entry.loss = individual_loss(entry.ind, batch, embedder, cfg.loss,
                                 eval_rng, cfg.limits);
    entry.ind.cached_loss = entry.loss;
  });

  // per-generation stats + best-so-far bookkeeping
  double loss_sum = 0.0;
  int best_slot = 0;
  for (int s = 0; s < pop; ++s) {
    double l = state.population[static_cast<size_t>(s)].loss;
    loss_sum += l;
    if (l < state.population[static_cast<size_t>(best_slot)].loss) {
      best_slot = s;
    }
  }
  const Scored& gen_best = state.population[static_cast<size_t>(best_slot)];
  if (state.best_generation < 0 || gen_best.loss < state.best.loss) {
    state.best = gen_best;
    state.best_generation = state.generation;
  }
  const double T = temperature(state.generation, cfg);
  state.history.push_back({state.generation, T, gen_best.loss,
                           loss_sum / pop, gen_best.ind.node_count()});

  // next generation: elites carried unchanged, the rest born from mutated
  // tournament winners
  std::vector<int> order(static_cast<size_t>(pop));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return state.population[static_cast<size_t>(a)].loss <
           state.population[static_cast<size_t>(b)].loss;
  });

  std::vector<double> losses(static_cast<size_t>(pop));
  for (int s = 0; s < pop; ++s) {
    losses[static_cast<size_t>(s)] = state.population[static_cast<size_t>(s)].loss;
  }

  std::vector<Scored> next;
  next.reserve(static_cast<size_t>(pop));
  for (int e = 0; e < cfg.elite_count; ++e) {
    next.push_back(state.population[static_cast<size_t>(order[static_cast<size_t>(e)])]);
  }
  for (int child = cfg.elite_count; child < pop; ++child) {
    int parent = select_parent(losses, cfg.tournament_size, T, state.rng);
    next.push_back(
        {mutate(state.population[static_cast<size_t>(parent)].ind, cfg,
                state.rng),
         0.0});
  }
  state.population = std::move(next);
  ++state.generation;
}

SearchResult run_search_from(SearchState& state, const SearchConfig& cfg,
                             const Dataset& dataset, const SearchHooks& hooks) {
  if (dataset.records.empty()) throw std::invalid_argument("empty dataset");
  GinParams gin = init_gin(cfg.gin_seed);
  const auto start = std::chrono::steady_clock::now();
  while (state.generation < cfg.max_generations) {
    if (cfg.time_budget_sec > 0.0) {
      std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start;
      if (elapsed.count() >= cfg.time_budget_sec) break;
    }
    evolve_generation(state, dataset, gin, cfg);
    if (hooks.on_generation) hooks.on_generation(state);
  }

  SearchResult result;
  if (state.best_generation >= 0) {
    result.best = state.best.ind;
    result.best_loss = state.best.loss;
  } else {
    result.best = state.population.front().ind;  // zero-budget run
  }
  result.best_generation = state.best_generation;
  result.history = state.history;
  return result;
}

SearchResult run_search(const SearchConfig& cfg, const Dataset& dataset,
                        const SearchHooks& hooks) {
  SearchState state = init_search_state(cfg);
  return run_search_from(state, cfg, dataset, hooks);
}

}  // namespace graphevo

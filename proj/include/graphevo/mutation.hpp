#ifndef GRAPHEVO_MUTATION_HPP
#define GRAPHEVO_MUTATION_HPP

#include "graphevo/code_tree.hpp"
#include "graphevo/rng.hpp"
#include "graphevo/search_config.hpp"

namespace graphevo {

enum class MutationKind : int {
  Insert,
  Knockout,
  OpChange,
  ParamChange,
  Randomize,
  NoOp,
};

MutationKind sample_mutation_kind(const MutationRates& rates, Rng& rng);

/// Uniformly sampled statement instruction with valid operands. CALL is in
/// the pool only when allowed for the target tree.
Instruction random_instruction(bool allow_call, const SearchConfig& cfg,
                               Rng& rng);

/// Apply one sampled mutation to a copy of `ind`. Mutations whose
/// preconditions cannot hold (knockout on an empty program, insertion at the
/// node cap, op/param change with nothing to change) degrade to no-ops.
/// The sampled kind is reported through `sampled` when provided.
Individual mutate(const Individual& ind, const SearchConfig& cfg, Rng& rng,
                  MutationKind* sampled = nullptr);

/// Same, with the kind forced; used by tests and by `mutate` internally.
Individual mutate_with_kind(const Individual& ind, MutationKind kind,
                            const SearchConfig& cfg, Rng& rng);

}  // namespace graphevo

#endif

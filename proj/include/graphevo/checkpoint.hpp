#ifndef GRAPHEVO_CHECKPOINT_HPP
#define GRAPHEVO_CHECKPOINT_HPP

#include <filesystem>
#include <stdexcept>

#include "graphevo/search.hpp"

namespace graphevo {

/// Missing, unreadable, or structurally damaged checkpoint file.
class CheckpointError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Readable checkpoint written by an incompatible version or under a
/// different search configuration.
class CheckpointMismatch : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hash of every configuration field that shapes search semantics (budgets
/// and thread counts excluded, so a resumed run may extend them).
uint64_t config_hash(const SearchConfig& cfg);

/// Versioned text container: config hash, generation, coordinator PRNG
/// state, best-so-far, and the full scored population. Loss values use
/// shortest round-trip decimals, so a save/load cycle is bit-exact.
void checkpoint_save(const SearchState& state, const SearchConfig& cfg,
                     const std::filesystem::path& path);
SearchState checkpoint_load(const std::filesystem::path& path,
                            const SearchConfig& cfg);

}  // namespace graphevo

#endif

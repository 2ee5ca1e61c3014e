#ifndef GRAPHEVO_INTERPRETER_HPP
#define GRAPHEVO_INTERPRETER_HPP

#include "graphevo/vm.hpp"

namespace graphevo {

/// Direct recursive execution of a code tree, the slow twin of the bytecode
/// path. It exists as a differential-testing oracle: both executions must
/// leave identical registers, node storage, and graphs behind. CALL
/// instructions are skipped here; use execute_interpreted for full runs.
void interpret_tree(const CodeTree& tree, Memory& mem);

/// The two-loop individual harness with tree interpretation instead of
/// bytecode. Loop-counter handling matches execute_compiled exactly.
void execute_interpreted(const Individual& ind, Memory& mem, int64_t n_nodes,
                         std::span<const int64_t> aux,
                         const Limits& limits = {});

}  // namespace graphevo

#endif

#ifndef GRAPHEVO_PROGRAM_HPP
#define GRAPHEVO_PROGRAM_HPP

#include <vector>

#include "graphevo/code_tree.hpp"
#include "graphevo/instruction.hpp"

namespace graphevo {

/// Linear bytecode: the instructions of one function body with branching
/// expressed through jump instructions. A jump target equal to size() means
/// "fall off the end".
using Program = std::vector<Instruction>;

struct CompiledIndividual {
  Program main;
  Program call;
};

/// Lower a code tree to bytecode. If-nodes become conditional jumps; a stack
/// of pending continuation targets resolves where each branch rejoins the
/// straight-line code. Branch tails end in an explicit jump even when it is
/// redundant; eliminating those is not worth the complexity.
Program compile(const CodeTree& tree);

/// Validates the individual against `limits`, compiles both trees, and caches
/// the result on the individual (copies share the cache until mutated).
/// Throws std::invalid_argument when validation fails.
const CompiledIndividual& compile_and_check(Individual& ind,
                                            const Limits& limits = {});

}  // namespace graphevo

#endif

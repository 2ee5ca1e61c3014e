#ifndef GRAPHEVO_RENDER_HPP
#define GRAPHEVO_RENDER_HPP

#include <string>

#include "graphevo/code_tree.hpp"

namespace graphevo {

/// Human-readable Python-style listing of an individual, wrapped in the four
/// hard-coded lines (the two function headers and the two loop headers).
/// int00-int02 render as the aliases i, j, N; the aux-input registers render
/// as W, W2, ... when aux_count makes them inputs. Output is byte
/// deterministic.
std::string render_pseudocode(const Individual& ind, int aux_count = 0);

/// One statement rendered as a single unindented line.
std::string render_instruction(const Instruction& instr, int aux_count = 0);

}  // namespace graphevo

#endif

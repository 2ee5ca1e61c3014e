#ifndef GRAPHEVO_SERIALIZE_HPP
#define GRAPHEVO_SERIALIZE_HPP

#include <string>
#include <string_view>

#include "graphevo/code_tree.hpp"
#include "graphevo/textio.hpp"

namespace graphevo {

/// Canonical program text: one line per node (opcode mnemonic plus numeric
/// operands), tree structure written with if/else/end markers, the two
/// function bodies introduced by `main` and `call`. Deterministic and
/// diff-friendly; see docs/formats.md for the grammar.
std::string serialize_individual(const Individual& ind);

/// Inverse of serialize_individual. Rejects malformed structure, unknown
/// mnemonics, operand counts or ranges that violate `limits`, CALL in the
/// call function, and node counts above the cap.
Individual parse_individual(std::string_view text, const Limits& limits = {});

// Header-less forms for container formats (checkpoints) that embed many
// programs in one file.
void write_individual_body(std::string& out, const Individual& ind);
Individual parse_individual_body(LineCursor& cur, const Limits& limits);

}  // namespace graphevo

#endif

#ifndef GRAPHEVO_INSTRUCTION_HPP
#define GRAPHEVO_INSTRUCTION_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace graphevo {

// clang-format off
enum class Opcode : int32_t {
  // integer arithmetic
  PLUS_I, MINUS_I, TIMES_I, DIV_I, MOD_I,
  PLUS_IMM_I, MINUS_IMM_I, TIMES_IMM_I, DIV_IMM_I, MOD_IMM_I,
  // integer relational
  LT_I, LTE_I, EQ_I, GTE_I, GT_I, NEQ_I,
  LT_IMM_I, LTE_IMM_I, EQ_IMM_I, GTE_IMM_I, GT_IMM_I, NEQ_IMM_I,
  NZERO_I, ZERO_I,
  // floating-point relational
  LT_F, LTE_F, GTE_F, GT_F,
  LT_IMM_F, LTE_IMM_F, GTE_IMM_F, GT_IMM_F,
  // boolean
  AND_B, NAND_B, OR_B, NOR_B, XOR_B, XNOR_B, NOT_B,
  // conversion
  B_TO_I,
  // randomness
  RND_UNIF_F, RND_UNIF_I, RND_UNIF_IMM_I,
  // assignment
  ASGN_I, ASGN_F, ASGN_B, CONST_I, CONST_F,
  // edge operations
  ADD_EDGE, REMOVE_EDGE, FLIP_EDGE, IS_EDGE,
  // jumps (synthesized by compilation, never present in code trees)
  JUMP_ABS, JUMP_REL, JUMPZ, JUMPNZ,
  // inner-loop call
  CALL,
  // per-node storage
  STORE_I, LOAD_I,
};
// clang-format on

inline constexpr int kOpcodeCount = static_cast<int>(Opcode::LOAD_I) + 1;

enum class OperandKind : uint8_t {
  None,
  IntReg,
  BoolReg,
  FloatReg,
  IntImm,
  FloatImm,
  JumpTarget,
};

/// Per-opcode interpretation of the (out, in1, in2) operand slots.
struct OpSignature {
  OperandKind out = OperandKind::None;
  OperandKind in1 = OperandKind::None;
  OperandKind in2 = OperandKind::None;

  OperandKind slot(int i) const { return i == 0 ? out : (i == 1 ? in1 : in2); }
  bool operator==(const OpSignature&) const = default;
};

struct OpInfo {
  std::string_view name;
  OpSignature sig;
};

const OpInfo& op_info(Opcode op);
std::optional<Opcode> opcode_from_name(std::string_view name);

inline bool is_jump(Opcode op) {
  return op == Opcode::JUMP_ABS || op == Opcode::JUMP_REL ||
         op == Opcode::JUMPZ || op == Opcode::JUMPNZ;
}

/// Opcodes a statement node may carry. Jumps exist only in compiled form;
/// CALL is legal in the main function only.
std::span<const Opcode> statement_opcodes(bool allow_call);

/// Statement opcodes sharing the exact operand-kind signature of `op`
/// (including `op` itself).
std::span<const Opcode> same_signature_opcodes(Opcode op);

/// One fixed-width instruction: an op-code plus three 32-bit operand fields.
/// A FloatImm operand stores the bits of a 32-bit float in its field.
struct Instruction {
  Opcode op = Opcode::PLUS_I;
  int32_t out = 0;
  int32_t in1 = 0;
  int32_t in2 = 0;

  int32_t& slot(int i) { return i == 0 ? out : (i == 1 ? in1 : in2); }
  int32_t slot(int i) const { return i == 0 ? out : (i == 1 ? in1 : in2); }

  float float_slot(int i) const { return std::bit_cast<float>(slot(i)); }
  void set_float_slot(int i, float v) { slot(i) = std::bit_cast<int32_t>(v); }

  bool operator==(const Instruction&) const = default;
};

inline Instruction make_instr(Opcode op, int32_t a = 0, int32_t b = 0,
                              int32_t c = 0) {
  return Instruction{op, a, b, c};
}

/// Convenience for opcodes whose last used operand is a float immediate.
Instruction make_instr_f(Opcode op, int32_t a, int32_t b, float imm);

/// Number of used (non-None) operand slots.
int operand_count(Opcode op);

}  // namespace graphevo

#endif

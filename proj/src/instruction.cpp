#include "graphevo/instruction.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

namespace graphevo {

namespace {

constexpr OperandKind N = OperandKind::None;
constexpr OperandKind IR = OperandKind::IntReg;
constexpr OperandKind BR = OperandKind::BoolReg;
constexpr OperandKind FR = OperandKind::FloatReg;
constexpr OperandKind II = OperandKind::IntImm;
constexpr OperandKind FI = OperandKind::FloatImm;
constexpr OperandKind JT = OperandKind::JumpTarget;

constexpr OpInfo kOps[kOpcodeCount] = {
    {"PLUS_I", {IR, IR, IR}},
    {"MINUS_I", {IR, IR, IR}},
    {"TIMES_I", {IR, IR, IR}},
    {"DIV_I", {IR, IR, IR}},
    {"MOD_I", {IR, IR, IR}},
    {"PLUS_IMM_I", {IR, IR, II}},
    {"MINUS_IMM_I", {IR, IR, II}},
    {"TIMES_IMM_I", {IR, IR, II}},
    {"DIV_IMM_I", {IR, IR, II}},
    {"MOD_IMM_I", {IR, IR, II}},
    {"LT_I", {BR, IR, IR}},
    {"LTE_I", {BR, IR, IR}},
    {"EQ_I", {BR, IR, IR}},
    {"GTE_I", {BR, IR, IR}},
    {"GT_I", {BR, IR, IR}},
    {"NEQ_I", {BR, IR, IR}},
    {"LT_IMM_I", {BR, IR, II}},
    {"LTE_IMM_I", {BR, IR, II}},
    {"EQ_IMM_I", {BR, IR, II}},
    {"GTE_IMM_I", {BR, IR, II}},
    {"GT_IMM_I", {BR, IR, II}},
    {"NEQ_IMM_I", {BR, IR, II}},
    {"NZERO_I", {BR, IR, N}},
    {"ZERO_I", {BR, IR, N}},
    {"LT_F", {BR, FR, FR}},
    {"LTE_F", {BR, FR, FR}},
    {"GTE_F", {BR, FR, FR}},
    {"GT_F", {BR, FR, FR}},
    {"LT_IMM_F", {BR, FR, FI}},
    {"LTE_IMM_F", {BR, FR, FI}},
    {"GTE_IMM_F", {BR, FR, FI}},
    {"GT_IMM_F", {BR, FR, FI}},
    {"AND_B", {BR, BR, BR}},
    {"NAND_B", {BR, BR, BR}},
    {"OR_B", {BR, BR, BR}},
    {"NOR_B", {BR, BR, BR}},
    {"XOR_B", {BR, BR, BR}},
    {"XNOR_B", {BR, BR, BR}},
    {"NOT_B", {BR, BR, N}},
    {"B_TO_I", {IR, BR, N}},
    {"RND_UNIF_F", {FR, N, N}},
    {"RND_UNIF_I", {IR, IR, N}},
    {"RND_UNIF_IMM_I", {IR, II, N}},
    {"ASGN_I", {IR, IR, N}},
    {"ASGN_F", {FR, FR, N}},
    {"ASGN_B", {BR, BR, N}},
    {"CONST_I", {IR, II, N}},
    {"CONST_F", {FR, FI, N}},
    {"ADD_EDGE", {N, IR, IR}},
    {"REMOVE_EDGE", {N, IR, IR}},
    {"FLIP_EDGE", {N, IR, IR}},
    {"IS_EDGE", {BR, IR, IR}},
    {"JUMP_ABS", {N, JT, N}},
    {"JUMP_REL", {N, JT, N}},
    {"JUMPZ", {N, BR, JT}},
    {"JUMPNZ", {N, BR, JT}},
    {"CALL", {N, N, N}},
    {"STORE_I", {N, IR, IR}},
    {"LOAD_I", {IR, IR, N}},
};

std::vector<Opcode> build_statement_pool(bool allow_call) {
  std::vector<Opcode> pool;
  for (int i = 0; i < kOpcodeCount; ++i) {
    auto op = static_cast<Opcode>(i);
    if (is_jump(op)) continue;
    if (op == Opcode::CALL && !allow_call) continue;
    pool.push_back(op);
  }
  return pool;
}

}  // namespace

const OpInfo& op_info(Opcode op) { return kOps[static_cast<int>(op)]; }

std::optional<Opcode> opcode_from_name(std::string_view name) {
  static const auto* index = [] {
    auto* m = new std::unordered_map<std::string_view, Opcode>();
    for (int i = 0; i < kOpcodeCount; ++i) {
      m->emplace(kOps[i].name, static_cast<Opcode>(i));
    }
    return m;
  }();
  auto it = index->find(name);
  if (it == index->end()) return std::nullopt;
  return it->second;
}

std::span<const Opcode> statement_opcodes(bool allow_call) {
  static const std::vector<Opcode> with_call = build_statement_pool(true);
  static const std::vector<Opcode> without_call = build_statement_pool(false);
  return allow_call ? with_call : without_call;
}

std::span<const Opcode> same_signature_opcodes(Opcode op) {
  static const auto* classes = [] {
    auto* table = new std::array<std::vector<Opcode>, kOpcodeCount>();
    for (Opcode a : statement_opcodes(true)) {
      for (Opcode b : statement_opcodes(true)) {
        if (op_info(a).sig == op_info(b).sig) {
          (*table)[static_cast<int>(a)].push_back(b);
        }
      }
    }
    return table;
  }();
  return (*classes)[static_cast<int>(op)];
}

Instruction make_instr_f(Opcode op, int32_t a, int32_t b, float imm) {
  Instruction instr{op, a, b, 0};
  const OpSignature& sig = op_info(op).sig;
  for (int i = 0; i < 3; ++i) {
    if (sig.slot(i) == OperandKind::FloatImm) {
      instr.set_float_slot(i, imm);
      return instr;
    }
  }
  return instr;
}

int operand_count(Opcode op) {
  const OpSignature& sig = op_info(op).sig;
  int n = 0;
  for (int i = 0; i < 3; ++i) {
    if (sig.slot(i) != OperandKind::None) ++n;
  }
  return n;
}

}  // namespace graphevo

#include "graphevo/render.hpp"

#include "graphevo/textio.hpp"

namespace graphevo {

namespace {

std::string pad2(int32_t idx) {
  std::string num = std::to_string(idx);
  return num.size() < 2 ? "0" + num : num;
}

std::string int_reg_name(int32_t idx, int aux_count) {
  if (idx == 0) return "i";
  if (idx == 1) return "j";
  if (idx == 2) return "N";
  if (idx >= 3 && idx < 3 + aux_count) {
    return idx == 3 ? "W" : "W" + std::to_string(idx - 2);
  }
  return "int" + pad2(idx);
}

std::string operand_name(OperandKind kind, const Instruction& instr, int slot,
                         int aux_count) {
  switch (kind) {
    case OperandKind::IntReg: return int_reg_name(instr.slot(slot), aux_count);
    case OperandKind::BoolReg: return "bool" + pad2(instr.slot(slot));
    case OperandKind::FloatReg: return "float" + pad2(instr.slot(slot));
    case OperandKind::IntImm: return std::to_string(instr.slot(slot));
    case OperandKind::FloatImm: return fmt_float(instr.float_slot(slot));
    case OperandKind::JumpTarget: return std::to_string(instr.slot(slot));
    case OperandKind::None: return {};
  }
  return {};
}

std::string infix(const Instruction& instr, const char* op, int aux_count) {
  const OpSignature& sig = op_info(instr.op).sig;
  std::string dst = operand_name(sig.out, instr, 0, aux_count);
  std::string a = operand_name(sig.in1, instr, 1, aux_count);
  std::string b = operand_name(sig.in2, instr, 2, aux_count);
  return dst + " = " + a + " " + op + " " + b;
}

// Arithmetic with out == in1 renders as augmented assignment (x += 1).
std::string arith(const Instruction& instr, const char* op, int aux_count) {
  const OpSignature& sig = op_info(instr.op).sig;
  if (instr.out == instr.in1) {
    return operand_name(sig.out, instr, 0, aux_count) + " " + op + "= " +
           operand_name(sig.in2, instr, 2, aux_count);
  }
  return infix(instr, op, aux_count);
}

std::string call_like(const Instruction& instr, const char* fn,
                      int aux_count) {
  const OpSignature& sig = op_info(instr.op).sig;
  return std::string(fn) + "(" + operand_name(sig.in1, instr, 1, aux_count) +
         ", " + operand_name(sig.in2, instr, 2, aux_count) + ")";
}

std::string name_of(const Instruction& instr, int slot, int aux_count) {
  return operand_name(op_info(instr.op).sig.slot(slot), instr, slot,
                      aux_count);
}

}  // namespace

std::string render_instruction(const Instruction& instr, int aux_count) {
  using enum Opcode;
  switch (instr.op) {
    case PLUS_I: case PLUS_IMM_I: return arith(instr, "+", aux_count);
    case MINUS_I: case MINUS_IMM_I: return arith(instr, "-", aux_count);
    case TIMES_I: case TIMES_IMM_I: return arith(instr, "*", aux_count);
    case DIV_I: case DIV_IMM_I: return arith(instr, "//", aux_count);
    case MOD_I: case MOD_IMM_I: return arith(instr, "%", aux_count);

    case LT_I: case LT_IMM_I: case LT_F: case LT_IMM_F:
      return infix(instr, "<", aux_count);
    case LTE_I: case LTE_IMM_I: case LTE_F: case LTE_IMM_F:
      return infix(instr, "<=", aux_count);
    case EQ_I: case EQ_IMM_I: return infix(instr, "==", aux_count);
    case GTE_I: case GTE_IMM_I: case GTE_F: case GTE_IMM_F:
      return infix(instr, ">=", aux_count);
    case GT_I: case GT_IMM_I: case GT_F: case GT_IMM_F:
      return infix(instr, ">", aux_count);
    case NEQ_I: case NEQ_IMM_I: return infix(instr, "!=", aux_count);

    case NZERO_I:
      return name_of(instr, 0, aux_count) + " = " +
             name_of(instr, 1, aux_count) + " != 0";
    case ZERO_I:
      return name_of(instr, 0, aux_count) + " = " +
             name_of(instr, 1, aux_count) + " == 0";

    case AND_B: return infix(instr, "and", aux_count);
    case OR_B: return infix(instr, "or", aux_count);
    case XOR_B: return infix(instr, "!=", aux_count);
    case XNOR_B: return infix(instr, "==", aux_count);
    case NAND_B:
      return name_of(instr, 0, aux_count) + " = not (" +
             name_of(instr, 1, aux_count) + " and " +
             name_of(instr, 2, aux_count) + ")";
    case NOR_B:
      return name_of(instr, 0, aux_count) + " = not (" +
             name_of(instr, 1, aux_count) + " or " +
             name_of(instr, 2, aux_count) + ")";
    case NOT_B:
      return name_of(instr, 0, aux_count) + " = not " +
             name_of(instr, 1, aux_count);

    case B_TO_I:
      return name_of(instr, 0, aux_count) + " = int(" +
             name_of(instr, 1, aux_count) + ")";

    case RND_UNIF_F: return name_of(instr, 0, aux_count) + " = random()";
    case RND_UNIF_I: case RND_UNIF_IMM_I:
      return name_of(instr, 0, aux_count) + " = uniform(" +
             name_of(instr, 1, aux_count) + ")";

    case ASGN_I: case ASGN_F: case ASGN_B: case CONST_I: case CONST_F:
      return name_of(instr, 0, aux_count) + " = " +
             name_of(instr, 1, aux_count);

    case ADD_EDGE: return call_like(instr, "add_edge", aux_count);
    case REMOVE_EDGE: return call_like(instr, "remove_edge", aux_count);
    case FLIP_EDGE: return call_like(instr, "flip_edge", aux_count);
    case IS_EDGE:
      return name_of(instr, 0, aux_count) + " = " +
             call_like(instr, "is_edge", aux_count);

    case STORE_I:
      return "node_store[" + name_of(instr, 1, aux_count) + "] = " +
             name_of(instr, 2, aux_count);
    case LOAD_I:
      return name_of(instr, 0, aux_count) + " = node_store[" +
             name_of(instr, 1, aux_count) + "]";

    case CALL: return "call()";

    // Jumps never occur in code trees; render them mnemonically for
    // program dumps.
    case JUMP_ABS: return "JUMP_ABS(" + std::to_string(instr.in1) + ")";
    case JUMP_REL: return "JUMP_REL(" + std::to_string(instr.in1) + ")";
    case JUMPZ:
      return "JUMPZ(" + std::to_string(instr.in1) + ", " +
             std::to_string(instr.in2) + ")";
    case JUMPNZ:
      return "JUMPNZ(" + std::to_string(instr.in1) + ", " +
             std::to_string(instr.in2) + ")";
  }
  return {};
}

namespace {

void render_chain(std::string& out, const CodeTree& tree, int32_t idx,
                  int depth, int aux_count) {
  for (; idx != CodeNode::kNone; idx = tree.node(idx).next) {
    const CodeNode& n = tree.node(idx);
    std::string indent(static_cast<size_t>(4 * depth), ' ');
    if (n.kind == NodeKind::If) {
      out += indent + "if bool" + pad2(n.cond) + ":\n";
      if (n.then_child == CodeNode::kNone) {
        out += indent + "    pass\n";
      } else {
        render_chain(out, tree, n.then_child, depth + 1, aux_count);
      }
      if (n.else_child != CodeNode::kNone) {
        out += indent + "else:\n";
        render_chain(out, tree, n.else_child, depth + 1, aux_count);
      }
    } else if (n.kind == NodeKind::Statement) {
      out += indent + render_instruction(n.instr, aux_count) + "\n";
    }
  }
}

}  // namespace

std::string render_pseudocode(const Individual& ind, int aux_count) {
  std::string out;
  out += "def main():\n";
  out += "    for i in range(N):\n";
  render_chain(out, ind.main_tree, ind.main_tree.node(ind.main_tree.root()).next,
               2, aux_count);
  out += "\n";
  out += "def call():\n";
  out += "    for j in range(i):\n";
  render_chain(out, ind.call_tree, ind.call_tree.node(ind.call_tree.root()).next,
               2, aux_count);
  return out;
}

}  // namespace graphevo

#include "graphevo/vm.hpp"

#include <cassert>

namespace graphevo {

namespace {

inline int64_t wrap_add(int64_t a, int64_t b) {
  return static_cast<int64_t>(static_cast<uint64_t>(a) +
                              static_cast<uint64_t>(b));
}
inline int64_t wrap_sub(int64_t a, int64_t b) {
  return static_cast<int64_t>(static_cast<uint64_t>(a) -
                              static_cast<uint64_t>(b));
}
inline int64_t wrap_mul(int64_t a, int64_t b) {
  return static_cast<int64_t>(static_cast<uint64_t>(a) *
                              static_cast<uint64_t>(b));
}
// Truncating division with INT64_MIN / -1 pinned to its wrapped value.
inline int64_t wrap_div(int64_t a, int64_t b) {
  if (b == -1) return wrap_sub(0, a);
  return a / b;
}
inline int64_t wrap_mod(int64_t a, int64_t b) {
  if (b == -1) return 0;
  return a % b;
}

}  // namespace

void Memory::reset(const Limits& limits, int64_t n_nodes,
                   std::span<const int64_t> aux) {
  pc = 0;
  ints.assign(static_cast<size_t>(limits.int_regs), 0);
  bools.assign(static_cast<size_t>(limits.bool_regs), 0);
  floats.assign(static_cast<size_t>(limits.float_regs), 0.0);
  node_store.assign(static_cast<size_t>(n_nodes), 0);
  graph = SparseGraph(n_nodes);
  assert(static_cast<size_t>(limits.int_regs) >= 3 + aux.size());
  ints[2] = n_nodes;
  for (size_t k = 0; k < aux.size(); ++k) ints[3 + k] = aux[k];
}

bool exec_instruction(const Instruction& instr, Memory& mem) {
  auto& ints = mem.ints;
  auto& bools = mem.bools;
  auto& floats = mem.floats;
  const int32_t out = instr.out, in1 = instr.in1, in2 = instr.in2;

  switch (instr.op) {
    // ---- integer arithmetic ----
    case Opcode::PLUS_I: ints[out] = wrap_add(ints[in1], ints[in2]); break;
    case Opcode::MINUS_I: ints[out] = wrap_sub(ints[in1], ints[in2]); break;
    case Opcode::TIMES_I: ints[out] = wrap_mul(ints[in1], ints[in2]); break;
    case Opcode::DIV_I:
      if (ints[in2] != 0) ints[out] = wrap_div(ints[in1], ints[in2]);
      break;
    case Opcode::MOD_I:
      if (ints[in2] != 0) ints[out] = wrap_mod(ints[in1], ints[in2]);
      break;
    case Opcode::PLUS_IMM_I: ints[out] = wrap_add(ints[in1], in2); break;
    case Opcode::MINUS_IMM_I: ints[out] = wrap_sub(ints[in1], in2); break;
    case Opcode::TIMES_IMM_I: ints[out] = wrap_mul(ints[in1], in2); break;
    case Opcode::DIV_IMM_I:
      if (in2 != 0) ints[out] = wrap_div(ints[in1], in2);
      break;
    case Opcode::MOD_IMM_I:
      if (in2 != 0) ints[out] = wrap_mod(ints[in1], in2);
      break;

    // ---- integer relational ----
    case Opcode::LT_I: bools[out] = ints[in1] < ints[in2]; break;
    case Opcode::LTE_I: bools[out] = ints[in1] <= ints[in2]; break;
    case Opcode::EQ_I: bools[out] = ints[in1] == ints[in2]; break;
    case Opcode::GTE_I: bools[out] = ints[in1] >= ints[in2]; break;
    case Opcode::GT_I: bools[out] = ints[in1] > ints[in2]; break;
    case Opcode::NEQ_I: bools[out] = ints[in1] != ints[in2]; break;
    case Opcode::LT_IMM_I: bools[out] = ints[in1] < in2; break;
    case Opcode::LTE_IMM_I: bools[out] = ints[in1] <= in2; break;
    case Opcode::EQ_IMM_I: bools[out] = ints[in1] == in2; break;
    case Opcode::GTE_IMM_I: bools[out] = ints[in1] >= in2; break;
    case Opcode::GT_IMM_I: bools[out] = ints[in1] > in2; break;
    case Opcode::NEQ_IMM_I: bools[out] = ints[in1] != in2; break;
    case Opcode::NZERO_I: bools[out] = ints[in1] != 0; break;
    case Opcode::ZERO_I: bools[out] = ints[in1] == 0; break;

    // ---- floating-point relational ----
    case Opcode::LT_F: bools[out] = floats[in1] < floats[in2]; break;
    case Opcode::LTE_F: bools[out] = floats[in1] <= floats[in2]; break;
    case Opcode::GTE_F: bools[out] = floats[in1] >= floats[in2]; break;
    case Opcode::GT_F: bools[out] = floats[in1] > floats[in2]; break;
    case Opcode::LT_IMM_F:
      bools[out] = floats[in1] < instr.float_slot(2);
      break;
    case Opcode::LTE_IMM_F:
      bools[out] = floats[in1] <= instr.float_slot(2);
      break;
    case Opcode::GTE_IMM_F:
      bools[out] = floats[in1] >= instr.float_slot(2);
      break;
    case Opcode::GT_IMM_F:
      bools[out] = floats[in1] > instr.float_slot(2);
      break;

    // ---- boolean ----
    case Opcode::AND_B: bools[out] = bools[in1] && bools[in2]; break;
    case Opcode::NAND_B: bools[out] = !(bools[in1] && bools[in2]); break;
    case Opcode::OR_B: bools[out] = bools[in1] || bools[in2]; break;
    case Opcode::NOR_B: bools[out] = !(bools[in1] || bools[in2]); break;
    case Opcode::XOR_B: bools[out] = bools[in1] != bools[in2]; break;
    case Opcode::XNOR_B: bools[out] = bools[in1] == bools[in2]; break;
    case Opcode::NOT_B: bools[out] = !bools[in1]; break;

    // ---- conversion ----
    case Opcode::B_TO_I: ints[out] = bools[in1] ? 1 : 0; break;

    // ---- randomness ----
    case Opcode::RND_UNIF_F: floats[out] = mem.rng.next_double(); break;
    case Opcode::RND_UNIF_I:
      if (ints[in1] > 0) ints[out] = mem.rng.next_below(ints[in1]);
      break;
    case Opcode::RND_UNIF_IMM_I:
      if (in1 > 0) ints[out] = mem.rng.next_below(in1);
      break;

    // ---- assignment ----
    case Opcode::ASGN_I: ints[out] = ints[in1]; break;
    case Opcode::ASGN_F: floats[out] = floats[in1]; break;
    case Opcode::ASGN_B: bools[out] = bools[in1]; break;
    case Opcode::CONST_I: ints[out] = in1; break;
    case Opcode::CONST_F:
      floats[out] = static_cast<double>(instr.float_slot(1));
      break;

    // ---- graph ----
    case Opcode::ADD_EDGE: mem.graph.add_edge(ints[in1], ints[in2]); break;
    case Opcode::REMOVE_EDGE:
      mem.graph.remove_edge(ints[in1], ints[in2]);
      break;
    case Opcode::FLIP_EDGE: mem.graph.flip_edge(ints[in1], ints[in2]); break;
    case Opcode::IS_EDGE:
      bools[out] = mem.graph.is_edge(ints[in1], ints[in2]);
      break;

    // ---- jumps ----
    case Opcode::JUMP_ABS:
      mem.pc = in1;
      return true;
    case Opcode::JUMP_REL:
      mem.pc += in1;
      return true;
    case Opcode::JUMPZ:
      if (!bools[in1]) {
        mem.pc = in2;
        return true;
      }
      break;
    case Opcode::JUMPNZ:
      if (bools[in1]) {
        mem.pc = in2;
        return true;
      }
      break;

    // ---- per-node storage ----
    case Opcode::STORE_I: {
      int64_t idx = ints[in1];
      if (idx >= 0 && idx < static_cast<int64_t>(mem.node_store.size())) {
        mem.node_store[static_cast<size_t>(idx)] = ints[in2];
      }
      break;
    }
    case Opcode::LOAD_I: {
      int64_t idx = ints[in1];
      ints[out] =
          (idx >= 0 && idx < static_cast<int64_t>(mem.node_store.size()))
              ? mem.node_store[static_cast<size_t>(idx)]
              : 0;
      break;
    }

    case Opcode::CALL:
      break;  // only meaningful inside the individual harness
  }
  return false;
}

void run_program(const Program& prog, Memory& mem, ExecStats* stats) {
  const int64_t len = static_cast<int64_t>(prog.size());
  mem.pc = 0;
  while (mem.pc >= 0 && mem.pc < len) {
    const Instruction& instr = prog[static_cast<size_t>(mem.pc)];
    if (stats) ++stats->executed;
    if (!exec_instruction(instr, mem)) ++mem.pc;
  }
}

void execute_compiled(const CompiledIndividual& compiled, Memory& mem,
                      int64_t n_nodes, std::span<const int64_t> aux,
                      const Limits& limits, ExecStats* stats) {
  mem.reset(limits, n_nodes, aux);
  const Program& main_prog = compiled.main;
  const int64_t main_len = static_cast<int64_t>(main_prog.size());
  for (int64_t i = 0; i < n_nodes; ++i) {
    mem.ints[0] = i;
    mem.pc = 0;
    while (mem.pc >= 0 && mem.pc < main_len) {
      const Instruction& instr = main_prog[static_cast<size_t>(mem.pc)];
      if (stats) ++stats->executed;
      if (instr.op == Opcode::CALL) {
        int64_t saved_pc = mem.pc;
        for (int64_t j = 0; j < i; ++j) {
          mem.ints[1] = j;
          run_program(compiled.call, mem, stats);
        }
        mem.pc = saved_pc + 1;
      } else if (!exec_instruction(instr, mem)) {
        ++mem.pc;
      }
    }
  }
}

SparseGraph run_individual(Individual& ind, int64_t n_nodes,
                           std::span<const int64_t> aux, Rng& rng,
                           const Limits& limits) {
  const CompiledIndividual& compiled = compile_and_check(ind, limits);
  Memory mem;
  mem.rng = rng;
  execute_compiled(compiled, mem, n_nodes, aux, limits);
  rng = mem.rng;
  return std::move(mem.graph);
}

}  // namespace graphevo

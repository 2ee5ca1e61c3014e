#include "graphevo/interpreter.hpp"

namespace graphevo {

namespace {

// Runs one tree; when executing the main function, `call_tree` enables CALL
// to run the inner loop. Inside the call function CALL has no effect.
void run_node(const CodeTree& tree, int32_t idx, Memory& mem,
              const CodeTree* call_tree, int64_t outer_i) {
  if (idx == CodeNode::kNone) return;
  const CodeNode& n = tree.node(idx);

  if (n.kind == NodeKind::If) {
    if (mem.bools[n.cond]) {
      run_node(tree, n.then_child, mem, call_tree, outer_i);
    } else {
      run_node(tree, n.else_child, mem, call_tree, outer_i);
    }
  } else if (n.kind == NodeKind::Statement) {
    if (n.instr.op == Opcode::CALL) {
      if (call_tree != nullptr) {
        for (int64_t j = 0; j < outer_i; ++j) {
          mem.ints[1] = j;
          run_node(*call_tree, call_tree->root(), mem, nullptr, outer_i);
        }
      }
    } else {
      exec_instruction(n.instr, mem);
    }
  }

  run_node(tree, n.next, mem, call_tree, outer_i);
}

}  // namespace

void interpret_tree(const CodeTree& tree, Memory& mem) {
  run_node(tree, tree.root(), mem, nullptr, 0);
}

void execute_interpreted(const Individual& ind, Memory& mem, int64_t n_nodes,
                         std::span<const int64_t> aux, const Limits& limits) {
  mem.reset(limits, n_nodes, aux);
  for (int64_t i = 0; i < n_nodes; ++i) {
    mem.ints[0] = i;
    run_node(ind.main_tree, ind.main_tree.root(), mem, &ind.call_tree, i);
  }
}

}  // namespace graphevo

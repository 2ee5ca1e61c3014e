#include <stdexcept>
#include <utility>

#include "graphevo/program.hpp"

namespace graphevo {

namespace {

// Sentinel continuation meaning "jump past the end of the program".
constexpr int32_t kEnd = CodeNode::kNone;

}  // namespace

Program compile(const CodeTree& tree) {
  Program program;
  // Pending continuations: where control flow resumes when the current branch
  // runs out of nodes. Jumps are recorded against node indices first and
  // patched once every node's instruction offset is known.
  std::vector<int32_t> target_stack{kEnd};
  std::vector<std::pair<size_t, int32_t>> jump_list;  // (instr idx, node)
  std::vector<int32_t> instr_offset(static_cast<size_t>(tree.size()), 0);

  auto add_jump = [&](Opcode op, int32_t target_node, int32_t cond = 0) {
    jump_list.emplace_back(program.size(), target_node);
    if (op == Opcode::JUMP_ABS) {
      program.push_back(make_instr(Opcode::JUMP_ABS));
    } else {
      program.push_back(make_instr(op, 0, cond));
    }
  };

  for (int32_t idx : tree.traversal()) {
    const CodeNode& n = tree.node(idx);
    instr_offset[static_cast<size_t>(idx)] =
        static_cast<int32_t>(program.size());
    if (n.kind == NodeKind::If) {
      int32_t next_node = n.next;
      if (next_node == CodeNode::kNone) {
        next_node = target_stack.back();
        target_stack.pop_back();
      }
      if (n.then_child != CodeNode::kNone && n.else_child != CodeNode::kNone) {
        target_stack.push_back(next_node);
        target_stack.push_back(next_node);
        add_jump(Opcode::JUMPZ, n.else_child, n.cond);
      } else if (n.then_child != CodeNode::kNone) {
        target_stack.push_back(next_node);
        add_jump(Opcode::JUMPZ, next_node, n.cond);
      } else if (n.else_child != CodeNode::kNone) {
        target_stack.push_back(next_node);
        add_jump(Opcode::JUMPNZ, next_node, n.cond);
      } else {
        add_jump(Opcode::JUMP_ABS, next_node);
      }
    } else if (n.kind == NodeKind::Statement) {
      program.push_back(n.instr);
      if (n.next == CodeNode::kNone) {
        int32_t next_node = target_stack.back();
        target_stack.pop_back();
        add_jump(Opcode::JUMP_ABS, next_node);
      }
    }
  }

  for (auto [instr_idx, target_node] : jump_list) {
    int32_t target = target_node == kEnd
                         ? static_cast<int32_t>(program.size())
                         : instr_offset[static_cast<size_t>(target_node)];
    Instruction& jump = program[instr_idx];
    if (jump.op == Opcode::JUMP_ABS) {
      jump.in1 = target;
    } else {
      jump.in2 = target;
    }
  }
  return program;
}

const CompiledIndividual& compile_and_check(Individual& ind,
                                            const Limits& limits) {
  if (!ind.compiled) {
    std::string why;
    if (!validate_individual(ind, limits, &why)) {
      throw std::invalid_argument("invalid individual: " + why);
    }
    auto compiled = std::make_shared<CompiledIndividual>();
    compiled->main = compile(ind.main_tree);
    compiled->call = compile(ind.call_tree);
    ind.compiled = std::move(compiled);
  }
  return *ind.compiled;
}

}  // namespace graphevo

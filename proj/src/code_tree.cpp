#include "graphevo/code_tree.hpp"

#include <cmath>
#include <memory>

namespace graphevo {

std::vector<int32_t> CodeTree::traversal() const {
  std::vector<int32_t> order;
  order.reserve(nodes_.size());
  // Explicit stack; children are pushed in reverse visit order.
  std::vector<int32_t> stack{root()};
  while (!stack.empty()) {
    int32_t idx = stack.back();
    stack.pop_back();
    if (idx == CodeNode::kNone) continue;
    order.push_back(idx);
    const CodeNode& n = node(idx);
    stack.push_back(n.next);
    stack.push_back(n.else_child);
    stack.push_back(n.then_child);
  }
  return order;
}

int64_t CodeTree::node_count() const {
  int64_t count = 0;
  for (const CodeNode& n : nodes_) {
    if (n.kind != NodeKind::Root) ++count;
  }
  return count;
}

std::vector<SlotRef> CodeTree::attachment_slots() const {
  std::vector<SlotRef> slots;
  for (int32_t idx : traversal()) {
    slots.push_back({idx, Slot::Next});
    if (node(idx).kind == NodeKind::If) {
      slots.push_back({idx, Slot::Then});
      slots.push_back({idx, Slot::Else});
    }
  }
  return slots;
}

int32_t CodeTree::insert_at(SlotRef where, const CodeNode& n) {
  int32_t fresh = add_node(n);
  int32_t& slot = child(where.node, where.slot);
  node(fresh).next = slot;
  slot = fresh;
  return fresh;
}

std::optional<SlotRef> CodeTree::find_parent_slot(int32_t target) const {
  for (int32_t idx : traversal()) {
    const CodeNode& n = node(idx);
    if (n.next == target) return SlotRef{idx, Slot::Next};
    if (n.kind == NodeKind::If) {
      if (n.then_child == target) return SlotRef{idx, Slot::Then};
      if (n.else_child == target) return SlotRef{idx, Slot::Else};
    }
  }
  return std::nullopt;
}

void CodeTree::remove_node(int32_t victim) {
  if (victim == root()) return;
  auto parent = find_parent_slot(victim);
  if (!parent) return;
  child(parent->node, parent->slot) = node(victim).next;
  compact();
}

void CodeTree::compact() {
  // Rebuild the arena from the live traversal so spliced-out subtrees do not
  // accumulate across mutation chains.
  std::vector<int32_t> live = traversal();
  std::vector<int32_t> remap(nodes_.size(), CodeNode::kNone);
  std::vector<CodeNode> fresh;
  fresh.reserve(live.size());
  for (int32_t idx : live) {
    remap[static_cast<size_t>(idx)] = static_cast<int32_t>(fresh.size());
    fresh.push_back(nodes_[static_cast<size_t>(idx)]);
  }
  auto fix = [&](int32_t& ref) {
    if (ref != CodeNode::kNone) ref = remap[static_cast<size_t>(ref)];
  };
  for (CodeNode& n : fresh) {
    fix(n.then_child);
    fix(n.else_child);
    fix(n.next);
  }
  nodes_ = std::move(fresh);
}

namespace {

bool nodes_equal(const CodeTree& a, int32_t ia, const CodeTree& b, int32_t ib) {
  if (ia == CodeNode::kNone || ib == CodeNode::kNone) return ia == ib;
  const CodeNode& na = a.node(ia);
  const CodeNode& nb = b.node(ib);
  if (na.kind != nb.kind) return false;
  if (na.kind == NodeKind::Statement && !(na.instr == nb.instr)) return false;
  if (na.kind == NodeKind::If && na.cond != nb.cond) return false;
  return nodes_equal(a, na.then_child, b, nb.then_child) &&
         nodes_equal(a, na.else_child, b, nb.else_child) &&
         nodes_equal(a, na.next, b, nb.next);
}

}  // namespace

bool CodeTree::structurally_equal(const CodeTree& other) const {
  return nodes_equal(*this, root(), other, other.root());
}

Individual make_empty_individual() { return Individual{}; }

namespace {

bool validate_tree(const CodeTree& tree, const Limits& limits, bool is_main,
                   std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (int32_t idx : tree.traversal()) {
    const CodeNode& n = tree.node(idx);
    if (n.kind == NodeKind::Root && idx != tree.root()) {
      return fail("root node below the tree root");
    }
    if (n.kind == NodeKind::If) {
      if (n.cond < 0 || n.cond >= limits.bool_regs) {
        return fail("if condition register out of range");
      }
    }
    if (n.kind != NodeKind::If &&
        (n.then_child != CodeNode::kNone || n.else_child != CodeNode::kNone)) {
      return fail("branch slot on a non-if node");
    }
    if (n.kind != NodeKind::Statement) continue;

    const Instruction& instr = n.instr;
    if (is_jump(instr.op)) return fail("jump opcode inside a code tree");
    if (instr.op == Opcode::CALL && !is_main) {
      return fail("CALL inside the call function");
    }
    const OpSignature& sig = op_info(instr.op).sig;
    for (int s = 0; s < 3; ++s) {
      switch (sig.slot(s)) {
        case OperandKind::IntReg:
        case OperandKind::BoolReg:
        case OperandKind::FloatReg: {
          int32_t file = limits.reg_file_size(sig.slot(s));
          if (instr.slot(s) < 0 || instr.slot(s) >= file) {
            return fail(std::string("register operand out of range for ") +
                        std::string(op_info(instr.op).name));
          }
          break;
        }
        case OperandKind::FloatImm:
          if (!std::isfinite(instr.float_slot(s))) {
            return fail("non-finite float immediate");
          }
          break;
        default:
          break;
      }
    }
  }
  return true;
}

}  // namespace

bool validate_individual(const Individual& ind, const Limits& limits,
                         std::string* why) {
  if (!validate_tree(ind.main_tree, limits, true, why)) return false;
  if (!validate_tree(ind.call_tree, limits, false, why)) return false;
  if (ind.node_count() > limits.node_cap) {
    if (why) *why = "node count above cap";
    return false;
  }
  return true;
}

}  // namespace graphevo

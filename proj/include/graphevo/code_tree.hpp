#ifndef GRAPHEVO_CODE_TREE_HPP
#define GRAPHEVO_CODE_TREE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphevo/instruction.hpp"

namespace graphevo {

enum class NodeKind : uint8_t { Root, Statement, If };

/// One node of a code tree. Statement nodes carry an instruction and chain
/// through `next`. If-nodes carry the address of a boolean condition register
/// and own three child slots (then, else, next). The single root node carries
/// nothing; it exists so that inserting at the top of a function is the same
/// operation as inserting anywhere else.
struct CodeNode {
  static constexpr int32_t kNone = -1;

  NodeKind kind = NodeKind::Root;
  Instruction instr{};   // Statement only
  int32_t cond = 0;      // If only: boolean register address
  int32_t then_child = kNone;
  int32_t else_child = kNone;
  int32_t next = kNone;
};

/// Which child slot of a node an edge hangs off.
enum class Slot : uint8_t { Next, Then, Else };

/// A (node, slot) attachment point; the unit mutations operate on.
struct SlotRef {
  int32_t node;
  Slot slot;
};

/// Arena-backed tree. Nodes are addressed by index; copying the vector clones
/// the whole tree, which keeps individuals cheap value types.
class CodeTree {
 public:
  CodeTree() { nodes_.push_back(CodeNode{}); }

  const CodeNode& node(int32_t i) const { return nodes_[static_cast<size_t>(i)]; }
  CodeNode& node(int32_t i) { return nodes_[static_cast<size_t>(i)]; }
  int32_t root() const { return 0; }
  int32_t size() const { return static_cast<int32_t>(nodes_.size()); }

  int32_t add_node(const CodeNode& n) {
    nodes_.push_back(n);
    return static_cast<int32_t>(nodes_.size()) - 1;
  }

  int32_t& child(int32_t node_idx, Slot s) {
    CodeNode& n = node(node_idx);
    switch (s) {
      case Slot::Then: return n.then_child;
      case Slot::Else: return n.else_child;
      default: return n.next;
    }
  }
  int32_t child(int32_t node_idx, Slot s) const {
    return const_cast<CodeTree*>(this)->child(node_idx, s);
  }

  /// Depth-first node order: current -> thenBranch -> elseBranch ->
  /// nextInBranch, starting at (and including) the root.
  std::vector<int32_t> traversal() const;

  /// Statement + if nodes (the root does not count).
  int64_t node_count() const;

  /// All attachment slots: one Next slot per node, plus Then/Else per if-node.
  std::vector<SlotRef> attachment_slots() const;

  /// Insert a fresh node at the given slot; the slot's previous child becomes
  /// the new node's next-in-branch. Returns the new node's index.
  int32_t insert_at(SlotRef where, const CodeNode& n);

  /// Remove a non-root node: its next-in-branch is spliced into the parent
  /// slot, then/else subtrees are discarded, and the arena is compacted.
  void remove_node(int32_t victim);

  bool structurally_equal(const CodeTree& other) const;

 private:
  std::optional<SlotRef> find_parent_slot(int32_t target) const;
  void compact();

  std::vector<CodeNode> nodes_;
};

/// Container limits shared by the code model, the VM, and mutations.
struct Limits {
  int32_t int_regs = 12;
  int32_t bool_regs = 8;
  int32_t float_regs = 8;
  int32_t node_cap = 50;

  int32_t reg_file_size(OperandKind k) const {
    switch (k) {
      case OperandKind::IntReg: return int_regs;
      case OperandKind::BoolReg: return bool_regs;
      case OperandKind::FloatReg: return float_regs;
      default: return 0;
    }
  }
  bool operator==(const Limits&) const = default;
};

struct CompiledIndividual;

/// A candidate graph-generation algorithm: the bodies of the two hard-coded
/// loops, plus bookkeeping caches that never affect structural identity.
struct Individual {
  CodeTree main_tree;
  CodeTree call_tree;
  std::optional<double> cached_loss;
  std::shared_ptr<const CompiledIndividual> compiled;  // set by compile_and_check

  int64_t node_count() const {
    return main_tree.node_count() + call_tree.node_count();
  }
  bool structurally_equal(const Individual& other) const {
    return main_tree.structurally_equal(other.main_tree) &&
           call_tree.structurally_equal(other.call_tree);
  }
};

Individual make_empty_individual();

/// Checks every Individual invariant: operand ranges against the register
/// files, finite float immediates, no jump opcodes in trees, CALL only in the
/// main tree, and the node cap. On failure optionally reports why.
bool validate_individual(const Individual& ind, const Limits& limits,
                         std::string* why = nullptr);

}  // namespace graphevo

#endif

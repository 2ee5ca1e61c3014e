#ifndef GRAPHEVO_TEST_HELPERS_HPP
#define GRAPHEVO_TEST_HELPERS_HPP

#include <vector>

#include "graphevo/code_tree.hpp"
#include "graphevo/rng.hpp"
#include "graphevo/sparse_graph.hpp"

namespace graphevo::test {

/// Chains statements under a fresh root: root -> s0 -> s1 -> ...
inline CodeTree chain_tree(const std::vector<Instruction>& instrs) {
  CodeTree tree;
  int32_t prev = tree.root();
  for (const Instruction& instr : instrs) {
    CodeNode n;
    n.kind = NodeKind::Statement;
    n.instr = instr;
    int32_t idx = tree.add_node(n);
    tree.node(prev).next = idx;
    prev = idx;
  }
  return tree;
}

inline Individual main_only(const std::vector<Instruction>& instrs) {
  Individual ind;
  ind.main_tree = chain_tree(instrs);
  return ind;
}

/// The worked transformation example: a function body with a bare if, an
/// if/else, and a nested if, whose compiled form is known instruction by
/// instruction.
///
///   int05 = int00 - int01
///   if bool01:
///       pass
///   bool01 = int05 == int03
///   if bool01:
///       int06 = int00
///       add_edge(int01, int06)
///   else:
///       bool01 = int04 != 0
///       if bool01:
///           add_edge(int00, int01)
///       int05 = 4
inline CodeTree branch_example_tree() {
  CodeTree t;
  auto stmt = [&](Instruction instr) {
    CodeNode n;
    n.kind = NodeKind::Statement;
    n.instr = instr;
    return t.add_node(n);
  };
  auto ifnode = [&](int32_t cond) {
    CodeNode n;
    n.kind = NodeKind::If;
    n.cond = cond;
    return t.add_node(n);
  };

  int32_t s1 = stmt(make_instr(Opcode::MINUS_I, 5, 0, 1));
  int32_t if1 = ifnode(1);
  int32_t s2 = stmt(make_instr(Opcode::EQ_I, 1, 5, 3));
  int32_t if2 = ifnode(1);
  int32_t s3 = stmt(make_instr(Opcode::ASGN_I, 6, 0));
  int32_t s4 = stmt(make_instr(Opcode::ADD_EDGE, 0, 1, 6));
  int32_t s5 = stmt(make_instr(Opcode::NEQ_IMM_I, 1, 4, 0));
  int32_t if3 = ifnode(1);
  int32_t s6 = stmt(make_instr(Opcode::ADD_EDGE, 0, 0, 1));
  int32_t s7 = stmt(make_instr(Opcode::CONST_I, 5, 4));

  t.node(t.root()).next = s1;
  t.node(s1).next = if1;
  t.node(if1).next = s2;
  t.node(s2).next = if2;
  t.node(if2).then_child = s3;
  t.node(s3).next = s4;
  t.node(if2).else_child = s5;
  t.node(s5).next = if3;
  t.node(if3).then_child = s6;
  t.node(if3).next = s7;
  return t;
}

inline Individual branch_example_individual() {
  Individual ind;
  ind.main_tree = branch_example_tree();
  return ind;
}

/// Two-function example: main sets int04 = i, bool00 = W != 0, then calls the
/// inner loop, whose body is the branch example without the trailing
/// constant store.
inline Individual two_loop_individual() {
  Individual ind;
  ind.main_tree = chain_tree({
      make_instr(Opcode::ASGN_I, 4, 0),
      make_instr(Opcode::NEQ_IMM_I, 0, 3, 0),
      make_instr(Opcode::CALL),
  });

  CodeTree t;
  auto stmt = [&](Instruction instr) {
    CodeNode n;
    n.kind = NodeKind::Statement;
    n.instr = instr;
    return t.add_node(n);
  };
  auto ifnode = [&](int32_t cond) {
    CodeNode n;
    n.kind = NodeKind::If;
    n.cond = cond;
    return t.add_node(n);
  };
  int32_t s1 = stmt(make_instr(Opcode::MINUS_I, 5, 0, 1));
  int32_t if1 = ifnode(1);
  int32_t s2 = stmt(make_instr(Opcode::EQ_I, 1, 5, 3));
  int32_t if2 = ifnode(1);
  int32_t s3 = stmt(make_instr(Opcode::ASGN_I, 6, 0));
  int32_t s4 = stmt(make_instr(Opcode::ADD_EDGE, 0, 1, 6));
  int32_t s5 = stmt(make_instr(Opcode::NEQ_IMM_I, 1, 4, 0));
  int32_t if3 = ifnode(1);
  int32_t s6 = stmt(make_instr(Opcode::ADD_EDGE, 0, 0, 1));
  t.node(t.root()).next = s1;
  t.node(s1).next = if1;
  t.node(if1).next = s2;
  t.node(s2).next = if2;
  t.node(if2).then_child = s3;
  t.node(s3).next = s4;
  t.node(if2).else_child = s5;
  t.node(s5).next = if3;
  t.node(if3).then_child = s6;
  ind.call_tree = t;
  return ind;
}

/// for i in range(N): flip_edge(int03, i); int03 = uniform(i)
inline Individual random_flip_individual() {
  return main_only({
      make_instr(Opcode::FLIP_EDGE, 0, 3, 0),
      make_instr(Opcode::RND_UNIF_I, 3, 0),
  });
}

/// for i in range(N): int05 = uniform(i); int08 = int05 // 2;
/// add_edge(i, int08)
inline Individual random_attach_individual() {
  return main_only({
      make_instr(Opcode::RND_UNIF_I, 5, 0),
      make_instr(Opcode::DIV_IMM_I, 8, 5, 2),
      make_instr(Opcode::ADD_EDGE, 0, 0, 8),
  });
}

/// The published grid-from-width program, transcribed literally:
///
///   for i in range(N):
///       remove_edge(int06, int10)
///       add_edge(i, int06)
///       int07 = i
///       int09 = i - W
///       add_edge(int09, i)
///       int10 = int07 + int06
///       int06 = i + int05
inline Individual grid_width_verbatim_individual() {
  return main_only({
      make_instr(Opcode::REMOVE_EDGE, 0, 6, 10),
      make_instr(Opcode::ADD_EDGE, 0, 0, 6),
      make_instr(Opcode::ASGN_I, 7, 0),
      make_instr(Opcode::MINUS_I, 9, 0, 3),
      make_instr(Opcode::ADD_EDGE, 0, 9, 0),
      make_instr(Opcode::PLUS_I, 10, 7, 6),
      make_instr(Opcode::PLUS_I, 6, 0, 5),
  });
}

/// A branch-free grid builder that is exact for every width: the horizontal
/// neighbor collapses to a self-loop (a silent no-op) at row starts.
///
///   for i in range(N):
///       int08 = i % W
///       bool00 = int08 == 0
///       int05 = int(bool00)
///       int07 = int05 - 1
///       int06 = i + int07
///       add_edge(i, int06)
///       int09 = i - W
///       add_edge(int09, i)
inline Individual grid_width_exact_individual() {
  return main_only({
      make_instr(Opcode::MOD_I, 8, 0, 3),
      make_instr(Opcode::ZERO_I, 0, 8),
      make_instr(Opcode::B_TO_I, 5, 0),
      make_instr(Opcode::MINUS_IMM_I, 7, 5, 1),
      make_instr(Opcode::PLUS_I, 6, 0, 7),
      make_instr(Opcode::ADD_EDGE, 0, 0, 6),
      make_instr(Opcode::MINUS_I, 9, 0, 3),
      make_instr(Opcode::ADD_EDGE, 0, 9, 0),
  });
}

/// Row-major h x w grid built from the adjacency predicate
/// |r-r'| + |c-c'| == 1 over all node pairs; deliberately ignorant of the
/// constructive generator it cross-checks.
inline SparseGraph grid_oracle(int height, int width) {
  int64_t n = static_cast<int64_t>(height) * width;
  SparseGraph g(n);
  for (int64_t a = 0; a < n; ++a) {
    for (int64_t b = a + 1; b < n; ++b) {
      int64_t ra = a / width, ca = a % width;
      int64_t rb = b / width, cb = b % width;
      int64_t dist = (ra > rb ? ra - rb : rb - ra) + (ca > cb ? ca - cb : cb - ca);
      if (dist == 1) g.add_edge(a, b);
    }
  }
  return g;
}

/// Dense upper-triangle boolean matrix; replay target for edge-set fuzzing.
class DenseGraphOracle {
 public:
  explicit DenseGraphOracle(int n) : n_(n), cells_(static_cast<size_t>(n * n)) {}

  void add_edge(int64_t u, int64_t v) {
    if (valid(u, v)) at(u, v) = true;
  }
  void remove_edge(int64_t u, int64_t v) {
    if (valid(u, v)) at(u, v) = false;
  }
  void flip_edge(int64_t u, int64_t v) {
    if (valid(u, v)) at(u, v) = !at(u, v);
  }
  bool is_edge(int64_t u, int64_t v) const {
    return valid(u, v) && const_cast<DenseGraphOracle*>(this)->at(u, v);
  }
  int64_t edge_count() const {
    int64_t c = 0;
    for (bool b : cells_) c += b;
    return c;
  }

 private:
  bool valid(int64_t u, int64_t v) const {
    return u >= 0 && v >= 0 && u < n_ && v < n_ && u != v;
  }
  // stored at (min, max)
  std::vector<bool>::reference at(int64_t u, int64_t v) {
    int64_t a = u < v ? u : v;
    int64_t b = u < v ? v : u;
    return cells_[static_cast<size_t>(a * n_ + b)];
  }

  int64_t n_;
  std::vector<bool> cells_;
};

}  // namespace graphevo::test

#endif

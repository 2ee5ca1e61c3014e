#include <doctest.h>
#include <map>

#include "graphevo/mutation.hpp"
#include "graphevo/serialize.hpp"
#include "test_helpers.hpp"

using namespace graphevo;

TEST_CASE("mutation kinds are sampled at the configured rates") {
  SearchConfig cfg;
  Rng rng(1);
  std::map<MutationKind, int> counts;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    ++counts[sample_mutation_kind(cfg.rates, rng)];
  }
  auto frac = [&](MutationKind k) {
    return static_cast<double>(counts[k]) / draws;
  };
  CHECK(frac(MutationKind::Insert) == doctest::Approx(1.0 / 9).epsilon(0.05));
  CHECK(frac(MutationKind::Knockout) == doctest::Approx(3.0 / 9).epsilon(0.05));
  CHECK(frac(MutationKind::OpChange) == doctest::Approx(1.0 / 9).epsilon(0.05));
  CHECK(frac(MutationKind::ParamChange) ==
        doctest::Approx(2.0 / 9).epsilon(0.05));
  CHECK(frac(MutationKind::Randomize) == doctest::Approx(1.0 / 9).epsilon(0.05));
  CHECK(frac(MutationKind::NoOp) == doctest::Approx(1.0 / 9).epsilon(0.05));
}

TEST_CASE("no-op returns a structurally equal individual") {
  SearchConfig cfg;
  Rng rng(2);
  Individual ind = test::two_loop_individual();
  Individual child = mutate_with_kind(ind, MutationKind::NoOp, cfg, rng);
  CHECK(child.structurally_equal(ind));
}

TEST_CASE("degenerate mutations degrade to no-ops") {
  SearchConfig cfg;
  Rng rng(3);
  Individual empty = make_empty_individual();
  CHECK(mutate_with_kind(empty, MutationKind::Knockout, cfg, rng)
            .structurally_equal(empty));
  CHECK(mutate_with_kind(empty, MutationKind::OpChange, cfg, rng)
            .structurally_equal(empty));
  CHECK(mutate_with_kind(empty, MutationKind::ParamChange, cfg, rng)
            .structurally_equal(empty));
  CHECK(mutate_with_kind(empty, MutationKind::Randomize, cfg, rng)
            .structurally_equal(empty));

  // insertion at the node cap is refused
  SearchConfig tiny = cfg;
  tiny.limits.node_cap = 2;
  Individual full = test::main_only({make_instr(Opcode::CALL),
                                     make_instr(Opcode::RND_UNIF_F, 2)});
  CHECK(mutate_with_kind(full, MutationKind::Insert, tiny, rng)
            .structurally_equal(full));

  // a CALL-only program offers no op-change alternative (unique signature)
  Individual call_only = test::main_only({make_instr(Opcode::CALL)});
  CHECK(mutate_with_kind(call_only, MutationKind::OpChange, cfg, rng)
            .structurally_equal(call_only));
  CHECK(mutate_with_kind(call_only, MutationKind::ParamChange, cfg, rng)
            .structurally_equal(call_only));
}

TEST_CASE("insertion grows by one node and knockout shrinks by one") {
  SearchConfig cfg;
  Rng rng(4);
  Individual ind = test::branch_example_individual();
  for (int i = 0; i < 200; ++i) {
    Individual grown = mutate_with_kind(ind, MutationKind::Insert, cfg, rng);
    CHECK(grown.node_count() == ind.node_count() + 1);
    CHECK(validate_individual(grown, cfg.limits));
    Individual cut = mutate_with_kind(ind, MutationKind::Knockout, cfg, rng);
    CHECK(cut.node_count() <= ind.node_count() - 1);  // if-branches go too
    CHECK(validate_individual(cut, cfg.limits));
  }
}

TEST_CASE("op change preserves the operand signature") {
  SearchConfig cfg;
  Rng rng(5);
  Individual ind = test::main_only({make_instr(Opcode::PLUS_I, 4, 5, 6)});
  for (int i = 0; i < 100; ++i) {
    Individual child = mutate_with_kind(ind, MutationKind::OpChange, cfg, rng);
    const Instruction& instr =
        child.main_tree.node(child.main_tree.traversal()[1]).instr;
    CHECK(instr.op != Opcode::PLUS_I);
    CHECK(op_info(instr.op).sig == op_info(Opcode::PLUS_I).sig);
    CHECK(instr.out == 4);
    CHECK(instr.in1 == 5);
    CHECK(instr.in2 == 6);
  }
}

TEST_CASE("param change alters exactly one operand within range") {
  SearchConfig cfg;
  Rng rng(6);
  Individual ind = test::main_only({make_instr(Opcode::PLUS_I, 4, 5, 6)});
  int changed_total = 0;
  for (int i = 0; i < 300; ++i) {
    Individual child =
        mutate_with_kind(ind, MutationKind::ParamChange, cfg, rng);
    REQUIRE(validate_individual(child, cfg.limits));
    const Instruction& instr =
        child.main_tree.node(child.main_tree.traversal()[1]).instr;
    int changed = (instr.out != 4) + (instr.in1 != 5) + (instr.in2 != 6);
    CHECK(changed <= 1);
    changed_total += changed;
  }
  CHECK(changed_total > 200);  // zero-step rejection makes changes common
}

TEST_CASE("param change walks if conditions through the register file") {
  SearchConfig cfg;
  Rng rng(7);
  Individual ind;
  CodeNode branch;
  branch.kind = NodeKind::If;
  branch.cond = 4;
  ind.main_tree.node(ind.main_tree.root()).next =
      ind.main_tree.add_node(branch);
  bool moved = false;
  for (int i = 0; i < 50; ++i) {
    Individual child =
        mutate_with_kind(ind, MutationKind::ParamChange, cfg, rng);
    int32_t cond = child.main_tree.node(child.main_tree.traversal()[1]).cond;
    CHECK(cond >= 0);
    CHECK(cond < cfg.limits.bool_regs);
    moved |= cond != 4;
  }
  CHECK(moved);
}

TEST_CASE("randomization keeps both function sizes and the tree shape") {
  SearchConfig cfg;
  Rng rng(8);
  Individual ind = test::two_loop_individual();
  for (int i = 0; i < 50; ++i) {
    Individual child =
        mutate_with_kind(ind, MutationKind::Randomize, cfg, rng);
    REQUIRE(validate_individual(child, cfg.limits));
    CHECK(child.main_tree.node_count() == ind.main_tree.node_count());
    CHECK(child.call_tree.node_count() == ind.call_tree.node_count());
    // same kinds in the same traversal order = same shape
    auto kinds = [](const CodeTree& t) {
      std::vector<NodeKind> ks;
      for (int32_t idx : t.traversal()) ks.push_back(t.node(idx).kind);
      return ks;
    };
    CHECK(kinds(child.main_tree) == kinds(ind.main_tree));
    CHECK(kinds(child.call_tree) == kinds(ind.call_tree));
  }
}

TEST_CASE("random instructions never produce jumps or misplaced CALLs") {
  SearchConfig cfg;
  Rng rng(9);
  bool saw_call = false;
  for (int i = 0; i < 5000; ++i) {
    Instruction in_main = random_instruction(true, cfg, rng);
    CHECK(!is_jump(in_main.op));
    saw_call |= in_main.op == Opcode::CALL;
    Instruction in_call = random_instruction(false, cfg, rng);
    CHECK(!is_jump(in_call.op));
    CHECK(in_call.op != Opcode::CALL);
  }
  CHECK(saw_call);
}

TEST_CASE("mutation chains preserve every invariant") {
  SearchConfig cfg;
  Rng rng(10);
  std::string why;
  for (int chain = 0; chain < 300; ++chain) {
    Individual ind = make_empty_individual();
    for (int step = 0; step < 100; ++step) {
      ind = mutate(ind, cfg, rng);
      REQUIRE_MESSAGE(validate_individual(ind, cfg.limits, &why), why);
    }
  }
}

TEST_CASE("mutated clones leave the original untouched") {
  SearchConfig cfg;
  Rng rng(11);
  Individual ind = test::branch_example_individual();
  std::string before = serialize_individual(ind);
  for (int i = 0; i < 100; ++i) mutate(ind, cfg, rng);
  CHECK(serialize_individual(ind) == before);
}

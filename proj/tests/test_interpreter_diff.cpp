#include <doctest.h>

#include "graphevo/interpreter.hpp"
#include "graphevo/mutation.hpp"
#include "graphevo/vm.hpp"
#include "test_helpers.hpp"

using namespace graphevo;

// The traversal interpreter is the semantic oracle for the bytecode path:
// after any run, registers, node storage, and the built graph must agree
// bit for bit. The full-size sweep lives in the acceptance suite; this is
// the fast regression version.
TEST_CASE("bytecode and tree execution agree on random programs") {
  SearchConfig cfg;
  Rng mut_rng(404);
  int checked = 0;
  for (int round = 0; round < 150; ++round) {
    Individual ind = make_empty_individual();
    int steps = 1 + static_cast<int>(mut_rng.next_below(60));
    for (int s = 0; s < steps; ++s) ind = mutate(ind, cfg, mut_rng);

    for (int input = 0; input < 2; ++input) {
      int64_t n = 1 + mut_rng.next_below(30);
      std::vector<int64_t> aux;
      int64_t aux_count = mut_rng.next_below(3);
      for (int64_t a = 0; a < aux_count; ++a) {
        aux.push_back(mut_rng.next_below(12));
      }
      uint64_t seed = mut_rng.next_u64();

      Memory vm_mem;
      vm_mem.rng = Rng(seed);
      CompiledIndividual compiled{compile(ind.main_tree),
                                  compile(ind.call_tree)};
      execute_compiled(compiled, vm_mem, n, aux, cfg.limits);

      Memory tree_mem;
      tree_mem.rng = Rng(seed);
      execute_interpreted(ind, tree_mem, n, aux, cfg.limits);

      REQUIRE(vm_mem.same_registers(tree_mem));
      REQUIRE(vm_mem.graph == tree_mem.graph);
      REQUIRE(vm_mem.rng == tree_mem.rng);  // same random draws consumed
      ++checked;
    }
  }
  CHECK(checked == 300);
}

TEST_CASE("the worked fixtures agree between both executions") {
  for (Individual ind :
       {test::branch_example_individual(), test::two_loop_individual(),
        test::random_flip_individual(), test::random_attach_individual(),
        test::grid_width_verbatim_individual(),
        test::grid_width_exact_individual()}) {
    for (int64_t n : {1, 2, 7, 19}) {
      std::vector<int64_t> aux{3};
      Memory vm_mem;
      vm_mem.rng = Rng(99);
      CompiledIndividual compiled{compile(ind.main_tree),
                                  compile(ind.call_tree)};
      execute_compiled(compiled, vm_mem, n, aux, Limits{});

      Memory tree_mem;
      tree_mem.rng = Rng(99);
      execute_interpreted(ind, tree_mem, n, aux, Limits{});

      REQUIRE(vm_mem.same_registers(tree_mem));
      REQUIRE(vm_mem.graph == tree_mem.graph);
    }
  }
}

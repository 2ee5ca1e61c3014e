#ifndef GRAPHEVO_VM_HPP
#define GRAPHEVO_VM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "graphevo/code_tree.hpp"
#include "graphevo/program.hpp"
#include "graphevo/rng.hpp"
#include "graphevo/sparse_graph.hpp"

namespace graphevo {

/// Full execution state of one run: program counter, the three register
/// files, the PRNG, per-node integer storage, and the graph being built.
/// Register accesses are not bounds-checked (programs are validated at
/// construction); node-storage and graph accesses are, with invalid writes
/// doing nothing and invalid reads producing 0.
struct Memory {
  int64_t pc = 0;
  std::vector<int64_t> ints;
  std::vector<uint8_t> bools;
  std::vector<double> floats;
  Rng rng;
  std::vector<int64_t> node_store;
  SparseGraph graph;

  /// Zero every register and node slot, clear the graph, then load the
  /// inputs: int02 = node count, int03.. = aux values. The PRNG is left
  /// untouched; its state flows across runs.
  void reset(const Limits& limits, int64_t n_nodes,
             std::span<const int64_t> aux);

  bool same_registers(const Memory& other) const {
    return ints == other.ints && bools == other.bools &&
           floats == other.floats && node_store == other.node_store;
  }
};

struct ExecStats {
  uint64_t executed = 0;  // instructions processed, including jumps and skips
};

/// Execute one non-CALL instruction. Dynamically invalid operations
/// (division by zero, non-positive random bounds, out-of-range node-storage
/// or graph writes) are skipped. Returns true when the instruction assigned
/// the program counter (a taken jump); otherwise the caller advances pc.
bool exec_instruction(const Instruction& instr, Memory& mem);

/// Run a compiled function body to completion from pc = 0. CALL instructions
/// are skipped; the individual harness below handles them.
void run_program(const Program& prog, Memory& mem, ExecStats* stats = nullptr);

/// One full individual execution against already-reset memory is the pair of
/// hard-coded loops:
///
///   for i in 0..n-1:   (i aliased to int00)
///     run main body; CALL runs the call body for j in 0..i-1 (j = int01)
///
/// The loop counters themselves are private, so a program that overwrites
/// int00/int01 cannot extend its own lifetime; both are rewritten from the
/// counters at each iteration start.
void execute_compiled(const CompiledIndividual& compiled, Memory& mem,
                      int64_t n_nodes, std::span<const int64_t> aux,
                      const Limits& limits = {}, ExecStats* stats = nullptr);

/// Compile (or reuse the cache), run, and return the built graph. The PRNG
/// state is taken from and returned to `rng`.
SparseGraph run_individual(Individual& ind, int64_t n_nodes,
                           std::span<const int64_t> aux, Rng& rng,
                           const Limits& limits = {});

}  // namespace graphevo

#endif

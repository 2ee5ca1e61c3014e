#include "graphevo/mutation.hpp"

#include <algorithm>
#include <cmath>

namespace graphevo {

namespace {

/// Brownian step for integer-valued parameters: a rounded Gaussian, with a
/// zero step rejected once so the mutation usually changes something.
int64_t discrete_step(double sigma, Rng& rng) {
  int64_t s = std::llround(rng.next_gaussian(sigma));
  if (s == 0) s = std::llround(rng.next_gaussian(sigma));
  return s;
}

int32_t clamp_reg(int64_t value, int32_t file_size) {
  if (value < 0) return 0;
  if (value >= file_size) return file_size - 1;
  return static_cast<int32_t>(value);
}

int32_t clamp_i32(int64_t value) {
  if (value < INT32_MIN) return INT32_MIN;
  if (value > INT32_MAX) return INT32_MAX;
  return static_cast<int32_t>(value);
}

struct TreeRef {
  CodeTree* tree;
  bool is_main;
};

std::array<TreeRef, 2> trees_of(Individual& ind) {
  return {TreeRef{&ind.main_tree, true}, TreeRef{&ind.call_tree, false}};
}

int32_t sample_register(OperandKind kind, const Limits& limits, Rng& rng) {
  return static_cast<int32_t>(rng.next_below(limits.reg_file_size(kind)));
}

bool apply_insert(Individual& ind, const SearchConfig& cfg, Rng& rng) {
  if (ind.node_count() >= cfg.limits.node_cap) return false;

  struct Point {
    TreeRef tree;
    SlotRef slot;
  };
  std::vector<Point> points;
  for (TreeRef ref : trees_of(ind)) {
    for (SlotRef slot : ref.tree->attachment_slots()) {
      points.push_back({ref, slot});
    }
  }
  const Point& at = points[static_cast<size_t>(
      rng.next_below(static_cast<int64_t>(points.size())))];

  CodeNode fresh;
  if (rng.next_bool(cfg.if_insert_prob)) {
    fresh.kind = NodeKind::If;
    fresh.cond = sample_register(OperandKind::BoolReg, cfg.limits, rng);
  } else {
    fresh.kind = NodeKind::Statement;
    fresh.instr = random_instruction(at.tree.is_main, cfg, rng);
  }
  at.tree.tree->insert_at(at.slot, fresh);
  return true;
}

bool apply_knockout(Individual& ind, Rng& rng) {
  struct Victim {
    CodeTree* tree;
    int32_t node;
  };
  std::vector<Victim> victims;
  for (TreeRef ref : trees_of(ind)) {
    for (int32_t idx : ref.tree->traversal()) {
      if (ref.tree->node(idx).kind != NodeKind::Root) {
        victims.push_back({ref.tree, idx});
      }
    }
  }
  if (victims.empty()) return false;
  const Victim& v = victims[static_cast<size_t>(
      rng.next_below(static_cast<int64_t>(victims.size())))];
  v.tree->remove_node(v.node);
  return true;
}

bool apply_op_change(Individual& ind, Rng& rng) {
  struct Line {
    CodeTree* tree;
    int32_t node;
  };
  std::vector<Line> lines;
  for (TreeRef ref : trees_of(ind)) {
    for (int32_t idx : ref.tree->traversal()) {
      if (ref.tree->node(idx).kind == NodeKind::Statement) {
        lines.push_back({ref.tree, idx});
      }
    }
  }
  if (lines.empty()) return false;
  const Line& line = lines[static_cast<size_t>(
      rng.next_below(static_cast<int64_t>(lines.size())))];
  Instruction& instr = line.tree->node(line.node).instr;

  std::vector<Opcode> alternatives;
  for (Opcode op : same_signature_opcodes(instr.op)) {
    if (op != instr.op) alternatives.push_back(op);
  }
  if (alternatives.empty()) return false;
  instr.op = alternatives[static_cast<size_t>(
      rng.next_below(static_cast<int64_t>(alternatives.size())))];
  return true;
}

bool apply_param_change(Individual& ind, const SearchConfig& cfg, Rng& rng) {
  struct Line {
    CodeTree* tree;
    int32_t node;
  };
  std::vector<Line> lines;
  for (TreeRef ref : trees_of(ind)) {
    for (int32_t idx : ref.tree->traversal()) {
      const CodeNode& n = ref.tree->node(idx);
      if (n.kind == NodeKind::If ||
          (n.kind == NodeKind::Statement && operand_count(n.instr.op) > 0)) {
        lines.push_back({ref.tree, idx});
      }
    }
  }
  if (lines.empty()) return false;
  const Line& line = lines[static_cast<size_t>(
      rng.next_below(static_cast<int64_t>(lines.size())))];
  CodeNode& node = line.tree->node(line.node);

  if (node.kind == NodeKind::If) {
    node.cond = clamp_reg(node.cond + discrete_step(cfg.int_step_sigma, rng),
                          cfg.limits.bool_regs);
    return true;
  }

  Instruction& instr = node.instr;
  const OpSignature& sig = op_info(instr.op).sig;
  std::vector<int> used;
  for (int s = 0; s < 3; ++s) {
    if (sig.slot(s) != OperandKind::None) used.push_back(s);
  }
  int slot = used[static_cast<size_t>(
      rng.next_below(static_cast<int64_t>(used.size())))];
  switch (sig.slot(slot)) {
    case OperandKind::IntReg:
    case OperandKind::BoolReg:
    case OperandKind::FloatReg:
      instr.slot(slot) =
          clamp_reg(instr.slot(slot) + discrete_step(cfg.int_step_sigma, rng),
                    cfg.limits.reg_file_size(sig.slot(slot)));
      break;
    case OperandKind::IntImm:
      instr.slot(slot) = clamp_i32(static_cast<int64_t>(instr.slot(slot)) +
                                   discrete_step(cfg.int_step_sigma, rng));
      break;
    case OperandKind::FloatImm: {
      float stepped = instr.float_slot(slot) +
                      static_cast<float>(rng.next_gaussian(cfg.float_step_sigma));
      instr.set_float_slot(slot, stepped);
      break;
    }
    default:
      break;
  }
  return true;
}

bool apply_randomize(Individual& ind, const SearchConfig& cfg, Rng& rng) {
  bool changed = false;
  for (TreeRef ref : trees_of(ind)) {
    for (int32_t idx : ref.tree->traversal()) {
      CodeNode& n = ref.tree->node(idx);
      if (n.kind == NodeKind::Statement) {
        n.instr = random_instruction(ref.is_main, cfg, rng);
        changed = true;
      } else if (n.kind == NodeKind::If) {
        n.cond = sample_register(OperandKind::BoolReg, cfg.limits, rng);
        changed = true;
      }
    }
  }
  return changed;
}

}  // namespace

MutationKind sample_mutation_kind(const MutationRates& rates, Rng& rng) {
  const double weights[6] = {rates.insert,       rates.knockout,
                             rates.op_change,    rates.param_change,
                             rates.randomize,    rates.noop};
  double u = rng.next_double() * rates.total();
  double acc = 0.0;
  for (int k = 0; k < 6; ++k) {
    acc += weights[k];
    if (u < acc) return static_cast<MutationKind>(k);
  }
  return MutationKind::NoOp;
}

Instruction random_instruction(bool allow_call, const SearchConfig& cfg,
                               Rng& rng) {
  std::span<const Opcode> pool = statement_opcodes(allow_call);
  Instruction instr{};
  instr.op = pool[static_cast<size_t>(
      rng.next_below(static_cast<int64_t>(pool.size())))];
  const OpSignature& sig = op_info(instr.op).sig;
  for (int s = 0; s < 3; ++s) {
    switch (sig.slot(s)) {
      case OperandKind::IntReg:
      case OperandKind::BoolReg:
      case OperandKind::FloatReg:
        instr.slot(s) = sample_register(sig.slot(s), cfg.limits, rng);
        break;
      case OperandKind::IntImm:
        instr.slot(s) = static_cast<int32_t>(
            rng.next_below(2 * cfg.int_imm_range + 1) - cfg.int_imm_range);
        break;
      case OperandKind::FloatImm:
        instr.set_float_slot(
            s, static_cast<float>((2.0 * rng.next_double() - 1.0) *
                                  cfg.float_imm_range));
        break;
      default:
        break;
    }
  }
  return instr;
}

Individual mutate_with_kind(const Individual& ind, MutationKind kind,
                            const SearchConfig& cfg, Rng& rng) {
  Individual child = ind;
  bool changed = false;
  switch (kind) {
    case MutationKind::Insert: changed = apply_insert(child, cfg, rng); break;
    case MutationKind::Knockout: changed = apply_knockout(child, rng); break;
    case MutationKind::OpChange: changed = apply_op_change(child, rng); break;
    case MutationKind::ParamChange:
      changed = apply_param_change(child, cfg, rng);
      break;
    case MutationKind::Randomize:
      changed = apply_randomize(child, cfg, rng);
      break;
    case MutationKind::NoOp: break;
  }
  if (changed) {
    child.cached_loss.reset();
    child.compiled.reset();
  }
  return child;
}

Individual mutate(const Individual& ind, const SearchConfig& cfg, Rng& rng,
                  MutationKind* sampled) {
  MutationKind kind = sample_mutation_kind(cfg.rates, rng);
  if (sampled) *sampled = kind;
  return mutate_with_kind(ind, kind, cfg, rng);
}

}  // namespace graphevo

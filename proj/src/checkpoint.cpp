#include "graphevo/checkpoint.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "graphevo/serialize.hpp"
#include "graphevo/textio.hpp"

namespace graphevo {

namespace {

constexpr std::string_view kHeader = "graphevo-checkpoint 1";

uint64_t fnv1a(std::string_view text) {
  uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace

uint64_t config_hash(const SearchConfig& cfg) {
  std::string canon;
  auto add = [&](const std::string& v) {
    canon += v;
    canon += ';';
  };
  add(std::to_string(cfg.population_size));
  add(std::to_string(cfg.tournament_size));
  add(std::to_string(cfg.elite_count));
  add(fmt_double(cfg.temperature_initial));
  add(fmt_double(cfg.temperature_decay));
  add(std::to_string(cfg.batch_size));
  add(std::to_string(cfg.limits.int_regs));
  add(std::to_string(cfg.limits.bool_regs));
  add(std::to_string(cfg.limits.float_regs));
  add(std::to_string(cfg.limits.node_cap));
  add(fmt_double(cfg.loss.sigma));
  add(fmt_double(cfg.loss.reg_weight));
  add(std::to_string(static_cast<int>(cfg.loss.extractor)));
  add(fmt_double(cfg.rates.insert));
  add(fmt_double(cfg.rates.knockout));
  add(fmt_double(cfg.rates.op_change));
  add(fmt_double(cfg.rates.param_change));
  add(fmt_double(cfg.rates.randomize));
  add(fmt_double(cfg.rates.noop));
  add(fmt_double(cfg.if_insert_prob));
  add(fmt_double(cfg.int_step_sigma));
  add(fmt_double(cfg.float_step_sigma));
  add(std::to_string(cfg.int_imm_range));
  add(fmt_double(cfg.float_imm_range));
  add(std::to_string(cfg.master_seed));
  add(std::to_string(cfg.gin_seed));
  return fnv1a(canon);
}

void checkpoint_save(const SearchState& state, const SearchConfig& cfg,
                     const std::filesystem::path& path) {
  std::string out;
  out += kHeader;
  out += '\n';
  out += "config ";
  {
    char buf[17];
    auto res = std::to_chars(buf, buf + sizeof(buf), config_hash(cfg), 16);
    out.append(buf, res.ptr);
  }
  out += '\n';
  out += "generation " + std::to_string(state.generation) + '\n';
  out += "rng " + state.rng.state_hex() + '\n';
  out += "best_generation " + std::to_string(state.best_generation) + '\n';
  if (state.best_generation >= 0) {
    out += "best " + fmt_double(state.best.loss) + '\n';
    write_individual_body(out, state.best.ind);
  }
  out += "population " + std::to_string(state.population.size()) + '\n';
  for (size_t i = 0; i < state.population.size(); ++i) {
    const Scored& entry = state.population[i];
    out += "individual " + std::to_string(i) + ' ' + fmt_double(entry.loss) +
           '\n';
    write_individual_body(out, entry.ind);
  }

  std::ofstream file(path, std::ios::trunc);
  if (!file || !(file << out) || !file.flush()) {
    throw std::runtime_error("cannot write checkpoint " + path.string());
  }
}

SearchState checkpoint_load(const std::filesystem::path& path,
                            const SearchConfig& cfg) {
  std::ifstream file(path);
  if (!file) throw CheckpointError("cannot read checkpoint " + path.string());
  std::ostringstream buf;
  buf << file.rdbuf();
  std::string text = buf.str();

  try {
    LineCursor cur(text);
    std::string_view header = cur.take();
    if (header != kHeader) {
      if (header.starts_with("graphevo-checkpoint")) {
        throw CheckpointMismatch("unsupported checkpoint version: " +
                                 std::string(header));
      }
      throw CheckpointError("not a checkpoint file: " + path.string());
    }

    auto expect_kv = [&](std::string_view key) {
      auto tokens = split_ws(cur.take());
      if (tokens.size() != 2 || tokens[0] != key) {
        throw ParseError("expected '" + std::string(key) + " <value>'",
                         cur.line_number());
      }
      return tokens[1];
    };

    uint64_t stored_hash =
        parse_hex_u64(expect_kv("config"), cur.line_number());
    if (stored_hash != config_hash(cfg)) {
      throw CheckpointMismatch(
          "checkpoint was written under a different configuration");
    }

    SearchState state;
    state.generation = parse_i64(expect_kv("generation"), cur.line_number());
    state.rng = Rng(parse_hex_u64(expect_kv("rng"), cur.line_number()));
    state.best_generation =
        parse_i64(expect_kv("best_generation"), cur.line_number());
    if (state.best_generation >= 0) {
      auto tokens = split_ws(cur.take());
      if (tokens.size() != 2 || tokens[0] != "best") {
        throw ParseError("expected 'best <loss>'", cur.line_number());
      }
      state.best.loss = parse_double_exact(tokens[1], cur.line_number());
      state.best.ind = parse_individual_body(cur, cfg.limits);
    }

    int64_t pop = parse_i64(expect_kv("population"), cur.line_number());
    if (pop < 1) throw ParseError("population must be positive");
    state.population.reserve(static_cast<size_t>(pop));
    for (int64_t i = 0; i < pop; ++i) {
      auto tokens = split_ws(cur.take());
      if (tokens.size() != 3 || tokens[0] != "individual" ||
          parse_i64(tokens[1], cur.line_number()) != i) {
        throw ParseError("expected 'individual " + std::to_string(i) +
                             " <loss>'",
                         cur.line_number());
      }
      Scored entry;
      entry.loss = parse_double_exact(tokens[2], cur.line_number());
      entry.ind = parse_individual_body(cur, cfg.limits);
      entry.ind.cached_loss = entry.loss;
      state.population.push_back(std::move(entry));
    }
    if (!cur.done()) cur.fail("trailing content after population");
    return state;
  } catch (const ParseError& e) {
    throw CheckpointError("corrupt checkpoint: " + std::string(e.what()));
  }
}

}  // namespace graphevo

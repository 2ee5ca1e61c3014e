#include "graphevo/serialize.hpp"

#include <string>

namespace graphevo {

namespace {

constexpr std::string_view kHeader = "graphevo 1";

void write_instr(std::string& out, const Instruction& instr) {
  const OpInfo& info = op_info(instr.op);
  out += info.name;
  for (int s = 0; s < 3; ++s) {
    switch (info.sig.slot(s)) {
      case OperandKind::None:
        break;
      case OperandKind::FloatImm:
        out += ' ';
        out += fmt_float(instr.float_slot(s));
        break;
      default:
        out += ' ';
        out += std::to_string(instr.slot(s));
        break;
    }
  }
}

void write_chain(std::string& out, const CodeTree& tree, int32_t idx,
                 int depth) {
  for (; idx != CodeNode::kNone; idx = tree.node(idx).next) {
    const CodeNode& n = tree.node(idx);
    out.append(static_cast<size_t>(2 * depth), ' ');
    if (n.kind == NodeKind::If) {
      out += "if ";
      out += std::to_string(n.cond);
      out += '\n';
      write_chain(out, tree, n.then_child, depth + 1);
      if (n.else_child != CodeNode::kNone) {
        out.append(static_cast<size_t>(2 * depth), ' ');
        out += "else\n";
        write_chain(out, tree, n.else_child, depth + 1);
      }
      out.append(static_cast<size_t>(2 * depth), ' ');
      out += "end\n";
    } else if (n.kind == NodeKind::Statement) {
      write_instr(out, n.instr);
      out += '\n';
    }
  }
}

void write_function(std::string& out, const CodeTree& tree,
                    std::string_view name) {
  out += name;
  out += '\n';
  write_chain(out, tree, tree.node(tree.root()).next, 1);
  out += "end\n";
}

Instruction parse_instr(const std::vector<std::string_view>& tokens,
                        const LineCursor& cur) {
  auto op = opcode_from_name(tokens[0]);
  if (!op) cur.fail("unknown opcode '" + std::string(tokens[0]) + "'");
  Instruction instr{};
  instr.op = *op;
  const OpSignature& sig = op_info(*op).sig;
  size_t next_token = 1;
  for (int s = 0; s < 3; ++s) {
    if (sig.slot(s) == OperandKind::None) continue;
    if (next_token >= tokens.size()) cur.fail("missing operand");
    std::string_view tok = tokens[next_token++];
    if (sig.slot(s) == OperandKind::FloatImm) {
      instr.set_float_slot(s, parse_float_exact(tok, cur.line_number()));
    } else {
      int64_t v = parse_i64(tok, cur.line_number());
      if (v < INT32_MIN || v > INT32_MAX) cur.fail("operand out of range");
      instr.slot(s) = static_cast<int32_t>(v);
    }
  }
  if (next_token != tokens.size()) cur.fail("too many operands");
  return instr;
}

// Parses statements until one of `stop` markers is met; the marker line is
// consumed. Returns the head of the parsed chain and reports which marker
// ended it.
int32_t parse_chain(CodeTree& tree, LineCursor& cur,
                    bool allow_else, std::string_view* ended_by) {
  int32_t head = CodeNode::kNone;
  int32_t prev = CodeNode::kNone;
  auto attach = [&](int32_t idx) {
    if (prev == CodeNode::kNone) {
      head = idx;
    } else {
      tree.node(prev).next = idx;
    }
    prev = idx;
  };
  while (true) {
    std::string_view line = cur.take();
    if (line == "end" || (allow_else && line == "else")) {
      *ended_by = line;
      return head;
    }
    if (line == "else") cur.fail("'else' without a matching 'if'");
    auto tokens = split_ws(line);
    CodeNode n;
    if (tokens[0] == "if") {
      if (tokens.size() != 2) cur.fail("'if' takes one condition register");
      n.kind = NodeKind::If;
      int64_t cond = parse_i64(tokens[1], cur.line_number());
      if (cond < INT32_MIN || cond > INT32_MAX) cur.fail("condition out of range");
      n.cond = static_cast<int32_t>(cond);
      int32_t idx = tree.add_node(n);
      std::string_view ended;
      int32_t then_head = parse_chain(tree, cur, true, &ended);
      tree.node(idx).then_child = then_head;
      if (ended == "else") {
        tree.node(idx).else_child = parse_chain(tree, cur, false, &ended);
      }
      attach(idx);
    } else {
      n.kind = NodeKind::Statement;
      n.instr = parse_instr(tokens, cur);
      attach(tree.add_node(n));
    }
  }
}

CodeTree parse_function(LineCursor& cur, std::string_view name) {
  if (cur.take() != name) {
    cur.fail("expected '" + std::string(name) + "' section");
  }
  CodeTree tree;
  std::string_view ended;
  int32_t head = parse_chain(tree, cur, false, &ended);
  tree.node(tree.root()).next = head;
  return tree;
}

}  // namespace

std::string serialize_individual(const Individual& ind) {
  std::string out;
  out += kHeader;
  out += '\n';
  write_individual_body(out, ind);
  return out;
}

void write_individual_body(std::string& out, const Individual& ind) {
  write_function(out, ind.main_tree, "main");
  write_function(out, ind.call_tree, "call");
}

Individual parse_individual_body(LineCursor& cur, const Limits& limits) {
  Individual ind;
  ind.main_tree = parse_function(cur, "main");
  ind.call_tree = parse_function(cur, "call");
  std::string why;
  if (!validate_individual(ind, limits, &why)) {
    throw ParseError("invalid program: " + why, cur.line_number());
  }
  return ind;
}

Individual parse_individual(std::string_view text, const Limits& limits) {
  LineCursor cur(text);
  if (cur.take() != kHeader) {
    throw ParseError("bad header, expected '" + std::string(kHeader) + "'", 1);
  }
  Individual ind = parse_individual_body(cur, limits);
  if (!cur.done()) cur.fail("trailing content after 'call' section");
  return ind;
}

}  // namespace graphevo

// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#include "bnc/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

namespace bnc {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  raise(errc::parse_error, "line " + std::to_string(line) + ": " + msg);
}

std::string fmt_num(double v) {
  char buf[40];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// ---- rule text tokenizer ----

struct Lexer {
  std::string_view text;
  size_t pos = 0;
  int line;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool accept(std::string_view word) {
    skip_ws();
    if (text.substr(pos, word.size()) == word) {
      // keywords must not run into identifier characters
      size_t end = pos + word.size();
      if (end < text.size() && is_ident_char(text[end]) && is_ident_start(word[0])) return false;
      pos = end;
      return true;
    }
    return false;
  }
  void expect(char c, const std::string& what) {
    if (!accept(c)) parse_fail(line, "expected '" + std::string(1, c) + "' " + what);
  }
  std::string ident() {
    skip_ws();
    if (pos >= text.size() || !is_ident_start(text[pos])) parse_fail(line, "expected a name");
    size_t start = pos;
    while (pos < text.size() && is_ident_char(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  }
  double number() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
            text[pos] == 'e' || text[pos] == 'E' ||
            ((text[pos] == '+' || text[pos] == '-') &&
             (text[pos - 1] == 'e' || text[pos - 1] == 'E'))))
      ++pos;
    if (pos == start) parse_fail(line, "expected a number");
    double value = 0.0;
    auto res = std::from_chars(text.data() + start, text.data() + pos, value);
    if (res.ec != std::errc{}) parse_fail(line, "malformed number");
    return value;
  }
  int bit() {
    skip_ws();
    if (peek() == '0') {
      ++pos;
      return 0;
    }
    if (peek() == '1') {
      ++pos;
      return 1;
    }
    parse_fail(line, "expected 0 or 1");
  }
};

// ---- Boolean expressions, canonicalized to truth tables ----

struct Expr {
  enum class Kind { var, constant, nott, andd, orr, xorr };
  Kind kind = Kind::constant;
  int var = -1;
  bool value = false;
  std::vector<std::unique_ptr<Expr>> children;
};

using ExprPtr = std::unique_ptr<Expr>;

struct NameTable {
  const std::vector<std::string>* names;
  int resolve(const std::string& name, int line) const {
    for (size_t i = 0; i < names->size(); ++i)
      if ((*names)[i] == name) return static_cast<int>(i);
    parse_fail(line, "undeclared node " + name);
  }
};

ExprPtr parse_or(Lexer& lex, const NameTable& table);

ExprPtr make_nary(Expr::Kind kind, std::vector<ExprPtr> kids) {
  auto node = std::make_unique<Expr>();
  node->kind = kind;
  node->children = std::move(kids);
  return node;
}

ExprPtr parse_primary(Lexer& lex, const NameTable& table) {
  if (lex.accept('(')) {
    ExprPtr inner = parse_or(lex, table);
    lex.expect(')', "to close the group");
    return inner;
  }
  if (lex.accept('!')) {
    std::vector<ExprPtr> kids;
    kids.push_back(parse_primary(lex, table));
    return make_nary(Expr::Kind::nott, std::move(kids));
  }
  char c = lex.peek();
  if (c == '0' || c == '1') {
    auto node = std::make_unique<Expr>();
    node->kind = Expr::Kind::constant;
    node->value = lex.bit() == 1;
    return node;
  }
  for (auto [word, kind] : {std::pair{"OR", Expr::Kind::orr}, {"AND", Expr::Kind::andd},
                            {"XOR", Expr::Kind::xorr}, {"NOT", Expr::Kind::nott}}) {
    if (lex.accept(std::string_view(word))) {
      lex.expect('(', "after the operator name");
      std::vector<ExprPtr> kids;
      kids.push_back(parse_or(lex, table));
      while (lex.accept(',')) kids.push_back(parse_or(lex, table));
      lex.expect(')', "to close the argument list");
      if (kind == Expr::Kind::nott && kids.size() != 1)
        parse_fail(lex.line, "NOT takes exactly one argument");
      return make_nary(kind, std::move(kids));
    }
  }
  std::string name = lex.ident();
  auto node = std::make_unique<Expr>();
  node->kind = Expr::Kind::var;
  node->var = table.resolve(name, lex.line);
  return node;
}

ExprPtr parse_and(Lexer& lex, const NameTable& table) {
  ExprPtr left = parse_primary(lex, table);
  while (lex.accept('&')) {
    std::vector<ExprPtr> kids;
    kids.push_back(std::move(left));
    kids.push_back(parse_primary(lex, table));
    left = make_nary(Expr::Kind::andd, std::move(kids));
  }
  return left;
}

ExprPtr parse_xor(Lexer& lex, const NameTable& table) {
  ExprPtr left = parse_and(lex, table);
  while (lex.accept('^')) {
    std::vector<ExprPtr> kids;
    kids.push_back(std::move(left));
    kids.push_back(parse_and(lex, table));
    left = make_nary(Expr::Kind::xorr, std::move(kids));
  }
  return left;
}

ExprPtr parse_or(Lexer& lex, const NameTable& table) {
  ExprPtr left = parse_xor(lex, table);
  while (lex.accept('|')) {
    std::vector<ExprPtr> kids;
    kids.push_back(std::move(left));
    kids.push_back(parse_xor(lex, table));
    left = make_nary(Expr::Kind::orr, std::move(kids));
  }
  return left;
}

bool eval_expr(const Expr& e, const State& state) {
  switch (e.kind) {
    case Expr::Kind::var: return state.get(e.var);
    case Expr::Kind::constant: return e.value;
    case Expr::Kind::nott: return !eval_expr(*e.children[0], state);
    case Expr::Kind::andd: {
      for (const auto& kid : e.children)
        if (!eval_expr(*kid, state)) return false;
      return true;
    }
    case Expr::Kind::orr: {
      for (const auto& kid : e.children)
        if (eval_expr(*kid, state)) return true;
      return false;
    }
    case Expr::Kind::xorr: {
      bool acc = false;
      for (const auto& kid : e.children) acc ^= eval_expr(*kid, state);
      return acc;
    }
  }
  return false;
}

void expr_vars(const Expr& e, std::vector<int>& out) {
  if (e.kind == Expr::Kind::var) out.push_back(e.var);
  for (const auto& kid : e.children) expr_vars(*kid, out);
}

TruthTableRule tabulate(const Expr& expr, int n, int line) {
  std::vector<int> vars;
  expr_vars(expr, vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  int d = static_cast<int>(vars.size());
  if (d > 16) parse_fail(line, "expression references more than 16 nodes");
  TruthTableRule rule;
  rule.inputs = vars;
  rule.table.resize(size_t{1} << d);
  State probe(n);
  for (uint32_t idx = 0; idx < rule.table.size(); ++idx) {
    for (int k = 0; k < d; ++k) probe.set(vars[k], (idx >> (d - 1 - k)) & 1u);
    rule.table[idx] = eval_expr(expr, probe) ? 1 : 0;
  }
  return rule;
}

// ---- structured rule forms ----

BasicRule parse_basic_rule(Lexer& lex, const NameTable& table, int n);

UpdateRule parse_rule(Lexer& lex, const NameTable& table, int n) {
  if (lex.accept("RULESET")) {
    lex.expect('{', "after RULESET");
    RuleSet set;
    set.alternatives.push_back(parse_basic_rule(lex, table, n));
    while (lex.accept(';')) set.alternatives.push_back(parse_basic_rule(lex, table, n));
    lex.expect('}', "to close RULESET");
    return set;
  }
  return std::visit([](auto r) -> UpdateRule { return r; }, parse_basic_rule(lex, table, n));
}

BasicRule parse_basic_rule(Lexer& lex, const NameTable& table, int n) {
  if (lex.accept("CONST")) {
    lex.expect('(', "after CONST");
    int b = lex.bit();
    lex.expect(')', "to close CONST");
    return TruthTableRule{{}, {static_cast<uint8_t>(b)}};
  }
  if (lex.accept("TABLE")) {
    lex.expect('(', "after TABLE");
    TruthTableRule rule;
    rule.inputs.push_back(table.resolve(lex.ident(), lex.line));
    while (lex.accept(',')) rule.inputs.push_back(table.resolve(lex.ident(), lex.line));
    lex.expect(';', "before the table bits");
    lex.skip_ws();
    while (lex.peek() == '0' || lex.peek() == '1')
      rule.table.push_back(static_cast<uint8_t>(lex.bit()));
    lex.expect(')', "to close TABLE");
    if (!std::is_sorted(rule.inputs.begin(), rule.inputs.end()) ||
        std::adjacent_find(rule.inputs.begin(), rule.inputs.end()) != rule.inputs.end())
      parse_fail(lex.line, "TABLE inputs must be distinct and in declaration order");
    if (rule.table.size() != size_t{1} << rule.inputs.size())
      parse_fail(lex.line, "TABLE needs exactly 2^inputs bits");
    return rule;
  }
  if (lex.accept("THRESH")) {
    lex.expect('(', "after THRESH");
    ThresholdRule rule;
    while (!lex.accept(';')) {
      if (!rule.weights.empty()) lex.expect(',', "between weight terms");
      double weight;
      if (lex.accept('+')) {
        if (std::isdigit(static_cast<unsigned char>(lex.peek())) || lex.peek() == '.') {
          weight = lex.number();
          lex.expect('*', "between weight and node");
        } else {
          weight = 1.0;
        }
      } else if (lex.accept('-')) {
        if (std::isdigit(static_cast<unsigned char>(lex.peek())) || lex.peek() == '.') {
          weight = -lex.number();
          lex.expect('*', "between weight and node");
        } else {
          weight = -1.0;
        }
      } else if (std::isdigit(static_cast<unsigned char>(lex.peek())) || lex.peek() == '.') {
        weight = lex.number();
        lex.expect('*', "between weight and node");
      } else {
        parse_fail(lex.line, "weight terms look like +x2, -x3 or 1.5*x4");
      }
      int node = table.resolve(lex.ident(), lex.line);
      rule.weights.push_back({node, weight});
    }
    if (!lex.accept("tau")) parse_fail(lex.line, "THRESH needs tau=<value>");
    lex.expect('=', "after tau");
    rule.tau = lex.number();
    lex.expect(')', "to close THRESH");
    std::sort(rule.weights.begin(), rule.weights.end());
    for (size_t i = 1; i < rule.weights.size(); ++i)
      if (rule.weights[i].first == rule.weights[i - 1].first)
        parse_fail(lex.line, "duplicate node in THRESH");
    return rule;
  }
  if (lex.accept("NC")) {
    lex.expect('(', "after NC");
    NestedCanalyzingRule rule;
    while (!lex.accept(';')) {
      if (!rule.order.empty()) lex.expect(',', "between ranks");
      rule.order.push_back(table.resolve(lex.ident(), lex.line));
      lex.expect(':', "after the rank's node");
      rule.canalyzing.push_back(static_cast<uint8_t>(lex.bit()));
      lex.expect('-', "in '->'");
      lex.expect('>', "in '->'");
      rule.canalyzed.push_back(static_cast<uint8_t>(lex.bit()));
    }
    if (!lex.accept("default")) parse_fail(lex.line, "NC needs default=<bit>");
    lex.expect('=', "after default");
    rule.fallback = static_cast<uint8_t>(lex.bit());
    lex.expect(')', "to close NC");
    for (size_t i = 0; i < rule.order.size(); ++i)
      for (size_t j = i + 1; j < rule.order.size(); ++j)
        if (rule.order[i] == rule.order[j]) parse_fail(lex.line, "duplicate node in NC ranks");
    return rule;
  }
  // plain Boolean expression
  ExprPtr expr = parse_or(lex, table);
  return tabulate(*expr, n, lex.line);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> parts;
  std::istringstream in(line);
  std::string word;
  while (in >> word) parts.push_back(word);
  return parts;
}

std::string strip_comment(const std::string& line) {
  size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

NetworkDocument parse_network(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string buffer(text);
    std::istringstream in(buffer);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }

  int n = -1;
  std::vector<std::string> names;
  std::vector<std::optional<UpdateRule>> rules;
  std::vector<std::vector<std::string>> attractor_lines;
  std::vector<int> attractor_line_numbers;
  bool any_rule = false;

  for (size_t li = 0; li < lines.size(); ++li) {
    int lineno = static_cast<int>(li) + 1;
    std::string body = strip_comment(lines[li]);
    std::vector<std::string> parts = split_ws(body);
    if (parts.empty()) continue;

    if (parts[0] == "nodes") {
      if (n >= 0) parse_fail(lineno, "duplicate nodes line");
      if (parts.size() != 2) parse_fail(lineno, "usage: nodes <count>");
      n = std::atoi(parts[1].c_str());
      if (n < 1) parse_fail(lineno, "node count must be positive");
      names.resize(n);
      for (int i = 0; i < n; ++i) names[i] = "x" + std::to_string(i + 1);
      rules.resize(n);
      continue;
    }
    if (n < 0) parse_fail(lineno, "the document must start with a nodes line");

    if (parts[0] == "names") {
      if (any_rule) parse_fail(lineno, "names must come before the rules");
      if (static_cast<int>(parts.size()) != n + 1)
        parse_fail(lineno, "names needs one name per node");
      for (int i = 0; i < n; ++i) {
        const std::string& name = parts[i + 1];
        if (!is_ident_start(name[0]) ||
            !std::all_of(name.begin(), name.end(), is_ident_char))
          parse_fail(lineno, "invalid name " + name);
        names[i] = name;
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (names[i] == names[j]) parse_fail(lineno, "duplicate name " + names[i]);
      continue;
    }
    if (parts[0] == "node") {
      size_t eq = body.find('=');
      if (eq == std::string::npos) parse_fail(lineno, "usage: node <name> = <rule>");
      std::vector<std::string> head = split_ws(body.substr(0, eq));
      if (head.size() != 2) parse_fail(lineno, "usage: node <name> = <rule>");
      int target = -1;
      for (int i = 0; i < n; ++i)
        if (names[i] == head[1]) target = i;
      if (target < 0) parse_fail(lineno, "undeclared node " + head[1]);
      if (rules[target]) parse_fail(lineno, "duplicate rule for " + head[1]);
      std::string rule_text = body.substr(eq + 1);
      Lexer lex{rule_text, 0, lineno};
      NameTable table{&names};
      rules[target] = parse_rule(lex, table, n);
      if (!lex.eof()) parse_fail(lineno, "trailing text after the rule");
      any_rule = true;
      continue;
    }
    if (parts[0] == "attractor") {
      if (parts.size() < 2) parse_fail(lineno, "attractor needs at least one state");
      attractor_lines.push_back({parts.begin() + 1, parts.end()});
      attractor_line_numbers.push_back(lineno);
      continue;
    }
    parse_fail(lineno, "unknown directive " + parts[0]);
  }

  if (n < 0) parse_fail(1, "missing nodes line");
  std::vector<UpdateRule> final_rules;
  for (int i = 0; i < n; ++i) {
    if (!rules[i])
      raise(errc::parse_error, "missing rule for node " + names[i]);
    final_rules.push_back(*rules[i]);
  }
  if (attractor_lines.size() > 1)
    parse_fail(attractor_line_numbers[1], "more than one attractor line");

  NetworkDocument doc;
  doc.net = RegulatoryNetwork::from_rules(std::move(final_rules), names);
  if (!attractor_lines.empty()) {
    Attractor a;
    for (const std::string& bits : attractor_lines[0]) {
      if (static_cast<int>(bits.size()) != n)
        parse_fail(attractor_line_numbers[0], "attractor states need one bit per node");
      a.states.push_back(State::from_string(bits));
    }
    doc.attractor = std::move(a);
  }
  return doc;
}

namespace {

std::string serialize_basic(const BasicRule& rule, const std::vector<std::string>& names) {
  return std::visit(
      [&names](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, TruthTableRule>) {
          if (r.inputs.empty()) return std::string("CONST(") + (r.table[0] ? "1" : "0") + ")";
          std::string out = "TABLE(";
          for (size_t i = 0; i < r.inputs.size(); ++i)
            out += (i ? ", " : "") + names[r.inputs[i]];
          out += "; ";
          for (uint8_t b : r.table) out += b ? '1' : '0';
          return out + ")";
        } else if constexpr (std::is_same_v<T, ThresholdRule>) {
          std::string out = "THRESH(";
          for (size_t i = 0; i < r.weights.size(); ++i) {
            const auto& [node, w] = r.weights[i];
            if (i) out += ", ";
            if (w == 1.0)
              out += "+" + names[node];
            else if (w == -1.0)
              out += "-" + names[node];
            else
              out += fmt_num(w) + "*" + names[node];
          }
          return out + "; tau=" + fmt_num(r.tau) + ")";
        } else {
          std::string out = "NC(";
          for (size_t i = 0; i < r.order.size(); ++i) {
            if (i) out += ", ";
            out += names[r.order[i]] + ":" + (r.canalyzing[i] ? "1" : "0") + "->" +
                   (r.canalyzed[i] ? "1" : "0");
          }
          return out + "; default=" + (r.fallback ? "1" : "0") + ")";
        }
      },
      rule);
}

}  // namespace

std::string serialize_network(const NetworkDocument& doc) {
  const RegulatoryNetwork& net = doc.net;
  std::string out = "nodes " + std::to_string(net.n) + "\n";
  out += "names";
  for (const std::string& name : net.names) out += " " + name;
  out += "\n";
  for (int i = 0; i < net.n; ++i) {
    out += "node " + net.names[i] + " = ";
    if (const auto* set = std::get_if<RuleSet>(&net.rules[i])) {
      out += "RULESET{";
      for (size_t a = 0; a < set->alternatives.size(); ++a)
        out += (a ? "; " : "") + serialize_basic(set->alternatives[a], net.names);
      out += "}";
    } else {
      BasicRule basic = std::visit(
          [](const auto& r) -> BasicRule {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, RuleSet>)
              raise(errc::invalid_argument, "unexpected rule set");
            else
              return BasicRule{r};
          },
          net.rules[i]);
      out += serialize_basic(basic, net.names);
    }
    out += "\n";
  }
  if (doc.attractor) {
    out += "attractor";
    for (const State& s : doc.attractor->states) out += " " + s.to_string();
    out += "\n";
  }
  return out;
}

TssInstance parse_tss(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string buffer(text);
    std::istringstream in(buffer);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }
  int m = -1;
  TssInstance inst;
  std::vector<uint8_t> seen;
  for (size_t li = 0; li < lines.size(); ++li) {
    int lineno = static_cast<int>(li) + 1;
    std::vector<std::string> parts = split_ws(strip_comment(lines[li]));
    if (parts.empty()) continue;
    if (parts[0] == "tss") {
      if (m >= 0) parse_fail(lineno, "duplicate tss line");
      if (parts.size() != 2) parse_fail(lineno, "usage: tss <count>");
      m = std::atoi(parts[1].c_str());
      if (m < 0) parse_fail(lineno, "node count must be non-negative");
      inst.m = m;
      inst.in_edges.resize(m);
      inst.tau.resize(m);
      inst.provenance.resize(m);
      seen.assign(m, 0);
      continue;
    }
    if (m < 0) parse_fail(lineno, "the document must start with a tss line");
    if (parts[0] == "node") {
      if (parts.size() < 5 || parts[2] != "tau") parse_fail(lineno, "usage: node <id> tau <t> ...");
      int id = std::atoi(parts[1].c_str()) - 1;
      if (id < 0 || id >= m) parse_fail(lineno, "node id out of range");
      if (seen[id]) parse_fail(lineno, "duplicate node line");
      seen[id] = 1;
      inst.tau[id] = std::atoi(parts[3].c_str());
      if (parts[4] == "orig" && parts.size() == 6) {
        inst.provenance[id] = Provenance::original(std::atoi(parts[5].c_str()) - 1);
      } else if (parts[4] == "aux" && parts.size() == 7) {
        inst.provenance[id] = Provenance::auxiliary(std::atoi(parts[5].c_str()) - 1,
                                                    std::atoi(parts[6].c_str()) - 1);
      } else {
        parse_fail(lineno, "expected 'orig <owner>' or 'aux <owner> <clause>'");
      }
      continue;
    }
    if (parts[0] == "edge") {
      if (parts.size() != 3 && parts.size() != 4) parse_fail(lineno, "usage: edge <from> <to> [*k]");
      int from = std::atoi(parts[1].c_str()) - 1;
      int to = std::atoi(parts[2].c_str()) - 1;
      if (from < 0 || from >= m || to < 0 || to >= m) parse_fail(lineno, "edge endpoint out of range");
      int count = 1;
      if (parts.size() == 4) {
        if (parts[3][0] != '*') parse_fail(lineno, "multiplicity looks like *2");
        count = std::atoi(parts[3].c_str() + 1);
        if (count < 2) parse_fail(lineno, "multiplicity must be at least 2");
      }
      for (int k = 0; k < count; ++k) inst.in_edges[to].push_back(from);
      continue;
    }
    parse_fail(lineno, "unknown directive " + parts[0]);
  }
  if (m < 0) parse_fail(1, "missing tss line");
  for (int v = 0; v < m; ++v)
    if (!seen[v]) raise(errc::parse_error, "missing node line for node " + std::to_string(v + 1));
  for (auto& ins : inst.in_edges) std::sort(ins.begin(), ins.end());
  inst.validate();
  return inst;
}

std::string serialize_tss(const TssInstance& inst) {
  std::string out = "tss " + std::to_string(inst.m) + "\n";
  for (int v = 0; v < inst.m; ++v) {
    out += "node " + std::to_string(v + 1) + " tau " + std::to_string(inst.tau[v]);
    const Provenance& p = inst.provenance[v];
    if (p.kind == Provenance::Kind::original)
      out += " orig " + std::to_string(p.owner + 1);
    else
      out += " aux " + std::to_string(p.owner + 1) + " " + std::to_string(p.clause + 1);
    out += "\n";
  }
  std::vector<std::pair<std::pair<int, int>, int>> edges;  // ((from,to), count)
  for (int v = 0; v < inst.m; ++v)
    for (int j : inst.in_edges[v]) {
      if (!edges.empty() && edges.back().first == std::pair{j, v})
        ++edges.back().second;
      else
        edges.push_back({{j, v}, 1});
    }
  std::sort(edges.begin(), edges.end());
  // merge duplicates after sorting by (from, to)
  std::vector<std::pair<std::pair<int, int>, int>> merged;
  for (const auto& e : edges) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(e);
  }
  for (const auto& [edge, count] : merged) {
    out += "edge " + std::to_string(edge.first + 1) + " " + std::to_string(edge.second + 1);
    if (count > 1) out += " *" + std::to_string(count);
    out += "\n";
  }
  return out;
}

int log_level() {
  static int level = [] {
    const char* env = std::getenv("ATTRACTOR_CONTROL_LOG");
    return env ? std::atoi(env) : 0;
  }();
  return level;
}

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[info] " << msg << "\n";
}

void log_debug(const std::string& msg) {
  if (log_level() >= 2) std::cerr << "[debug] " << msg << "\n";
}

}  // namespace bnc

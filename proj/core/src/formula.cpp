// SPDX-License-Identifier: Apache-2.0
#include "fuzzymt/formula.hpp"

#include <cassert>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

namespace fuzzymt {

struct Formula::Node {
  Kind kind;
  std::string atom;
  double constant = 0.0;
  std::shared_ptr<const Node> lhs, rhs;
};

Formula Formula::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->atom = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::constant(TruthValue v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->constant = v.value();
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->lhs = std::move(f.node_);
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return Formula(std::move(n));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return Formula(std::move(n));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Implies;
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::atom_name() const { return node_->atom; }
TruthValue Formula::constant_value() const {
  return TruthValue(node_->constant);
}
Formula Formula::lhs() const { return Formula(node_->lhs); }
Formula Formula::rhs() const { return Formula(node_->rhs); }

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;

} // namespace

bool Formula::operator==(const Formula& other) const {
  struct Eq {
    static bool run(const Node* a, const Node* b) {
      if (a == b) return true;
      if (a->kind != b->kind) return false;
      switch (a->kind) {
      case Kind::Atom: return a->atom == b->atom;
      case Kind::Const: return a->constant == b->constant;
      case Kind::Not: return run(a->lhs.get(), b->lhs.get());
      default:
        return run(a->lhs.get(), b->lhs.get()) &&
               run(a->rhs.get(), b->rhs.get());
      }
    }
  };
  return Eq::run(node_.get(), other.node_.get());
}

std::vector<std::string> Formula::atoms() const {
  std::set<std::string> names;
  struct Walk {
    static void run(const Node* n, std::set<std::string>& out) {
      switch (n->kind) {
      case Kind::Atom: out.insert(n->atom); break;
      case Kind::Const: break;
      case Kind::Not: run(n->lhs.get(), out); break;
      default:
        run(n->lhs.get(), out);
        run(n->rhs.get(), out);
      }
    }
  };
  Walk::run(node_.get(), names);
  return {names.begin(), names.end()};
}

namespace {

// Printer precedence: -> is 1 (right-assoc), | is 2, & is 3, ! is 4.
int precedence(Formula::Kind k) {
  switch (k) {
  case Formula::Kind::Implies: return 1;
  case Formula::Kind::Or: return 2;
  case Formula::Kind::And: return 3;
  case Formula::Kind::Not: return 4;
  default: return 5;
  }
}

std::string shortest_repr(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  assert(ec == std::errc());
  return std::string(buf, end);
}

void print_node(const Formula::Node* n, int min_prec, std::string& out);

void print_child(const NodePtr& child, int min_prec, std::string& out) {
  print_node(child.get(), min_prec, out);
}

void print_node(const Formula::Node* n, int min_prec, std::string& out) {
  const int prec = precedence(n->kind);
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (n->kind) {
  case Formula::Kind::Atom:
    out += n->atom;
    break;
  case Formula::Kind::Const:
    out += shortest_repr(n->constant);
    break;
  case Formula::Kind::Not:
    out += '!';
    print_child(n->lhs, 4, out);
    break;
  case Formula::Kind::And:
    print_child(n->lhs, 3, out);
    out += " & ";
    print_child(n->rhs, 4, out);
    break;
  case Formula::Kind::Or:
    print_child(n->lhs, 2, out);
    out += " | ";
    print_child(n->rhs, 3, out);
    break;
  case Formula::Kind::Implies:
    print_child(n->lhs, 2, out);
    out += " -> ";
    print_child(n->rhs, 1, out);
    break;
  }
  if (parens) out += ')';
}

} // namespace

std::string Formula::print() const {
  std::string out;
  print_node(node_.get(), 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok { Ident, Number, Not, And, Or, Arrow, LParen, RParen, End };

struct Token {
  Tok type;
  std::string text;
  int line;
  int column;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws();
    const int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::End, "", line, col};
    const char c = text_[pos_];
    if (c == '(') { advance(); return {Tok::LParen, "(", line, col}; }
    if (c == ')') { advance(); return {Tok::RParen, ")", line, col}; }
    if (c == '!') { advance(); return {Tok::Not, "!", line, col}; }
    if (c == '&') { advance(); return {Tok::And, "&", line, col}; }
    if (c == '|') { advance(); return {Tok::Or, "|", line, col}; }
    if (c == '-') {
      advance();
      if (pos_ < text_.size() && text_[pos_] == '>') {
        advance();
        return {Tok::Arrow, "->", line, col};
      }
      throw ParseError("expected '>' after '-'", line_, col_, "'>'");
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string num;
      bool dot = false;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
              (!dot && text_[pos_] == '.'))) {
        dot = dot || text_[pos_] == '.';
        num += text_[pos_];
        advance();
      }
      if (num == ".") {
        throw ParseError("malformed number", line, col, "digit");
      }
      return {Tok::Number, num, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        id += text_[pos_];
        advance();
      }
      if (id == "not") return {Tok::Not, id, line, col};
      if (id == "and") return {Tok::And, id, line, col};
      if (id == "or") return {Tok::Or, id, line, col};
      return {Tok::Ident, id, line, col};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line,
                     col, "atom, constant, '!', '('");
  }

private:
  void skip_ws() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else {
        break;
      }
    }
  }
  void advance() {
    ++pos_;
    ++col_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
public:
  explicit Parser(const std::string& text) : lexer_(text) {
    current_ = lexer_.next();
  }

  Formula parse_all() {
    Formula f = parse_implies();
    if (current_.type != Tok::End) {
      fail("unexpected token '" + current_.text + "'",
           "end of input, '->', '&', '|'");
    }
    return f;
  }

private:
  // expr := or ('->' expr)?   right-associative
  Formula parse_implies() {
    Formula lhs = parse_or();
    if (current_.type == Tok::Arrow) {
      consume();
      return Formula::implication(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (current_.type == Tok::Or) {
      consume();
      lhs = Formula::disjunction(std::move(lhs), parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (current_.type == Tok::And) {
      consume();
      lhs = Formula::conjunction(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Formula parse_unary() {
    if (current_.type == Tok::Not) {
      consume();
      return Formula::negation(parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    switch (current_.type) {
    case Tok::Ident: {
      Formula f = Formula::atom(current_.text);
      consume();
      return f;
    }
    case Tok::Number: {
      const double v = std::strtod(current_.text.c_str(), nullptr);
      if (v < 0.0 || v > 1.0) {
        throw ParseError("constant " + current_.text + " outside [0,1]",
                         current_.line, current_.column,
                         "constant in [0,1]");
      }
      Formula f = Formula::constant(TruthValue(v));
      consume();
      return f;
    }
    case Tok::LParen: {
      consume();
      Formula f = parse_implies();
      expect(Tok::RParen, "')'");
      return f;
    }
    default:
      fail("unexpected token '" + current_.text + "'",
           "atom, constant, '!', '('");
    }
  }

  void consume() { current_ = lexer_.next(); }

  void expect(Tok type, const std::string& what) {
    if (current_.type != type) {
      fail("unexpected token '" + current_.text + "'", what);
    }
    consume();
  }

  [[noreturn]] void fail(const std::string& msg, const std::string& expected) {
    std::ostringstream os;
    os << "syntax error at line " << current_.line << ", column "
       << current_.column << ": " << msg << " (expected " << expected << ")";
    throw ParseError(os.str(), current_.line, current_.column, expected);
  }

  Lexer lexer_;
  Token current_;
};

} // namespace

Formula parse(const std::string& text) { return Parser(text).parse_all(); }

TruthValue evaluate(const Formula& f, const AtomValuation& v,
                    const Algebra& alg) {
  switch (f.kind()) {
  case Formula::Kind::Atom: {
    const auto it = v.find(f.atom_name());
    if (it == v.end()) {
      throw EvaluationError("unbound atom '" + f.atom_name() + "'");
    }
    return it->second;
  }
  case Formula::Kind::Const:
    return f.constant_value();
  case Formula::Kind::Not:
    return alg.negate(evaluate(f.lhs(), v, alg));
  case Formula::Kind::And:
    return alg.conjoin(evaluate(f.lhs(), v, alg), evaluate(f.rhs(), v, alg));
  case Formula::Kind::Or:
    return alg.disjoin(evaluate(f.lhs(), v, alg), evaluate(f.rhs(), v, alg));
  case Formula::Kind::Implies:
    return alg.imply(evaluate(f.lhs(), v, alg), evaluate(f.rhs(), v, alg));
  }
  throw EvaluationError("corrupt formula node");
}

TruthTable truth_table(const Formula& f, const Algebra& alg, double step) {
  if (!(step > 0.0 && step <= 1.0)) {
    throw ValueError("truth table step must be in (0,1]");
  }
  TruthTable table;
  table.atoms = f.atoms();
  if (table.atoms.size() > 4) {
    throw CapacityError("truth table limited to 4 atoms, formula has " +
                        std::to_string(table.atoms.size()));
  }

  std::vector<double> levels;
  for (int k = 0;; ++k) {
    const double v = k * step;
    if (v >= 1.0 - 1e-12) break;
    levels.push_back(v);
  }
  levels.push_back(1.0);

  const std::size_t n = table.atoms.size();
  std::vector<std::size_t> idx(n, 0);
  AtomValuation valuation;
  while (true) {
    TruthTable::Row row;
    row.inputs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      row.inputs[i] = levels[idx[i]];
      valuation[table.atoms[i]] = TruthValue(levels[idx[i]]);
    }
    row.value = evaluate(f, valuation, alg).value();
    table.rows.push_back(std::move(row));
    if (n == 0) break;
    // odometer: last atom fastest, first (lexicographically least) slowest
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++idx[i] < levels.size()) break;
      idx[i] = 0;
      if (i == 0) return table;
    }
  }
  return table;
}

std::string TruthTable::to_csv() const {
  std::string out;
  for (const auto& a : atoms) {
    out += a;
    out += ',';
  }
  out += "value\n";
  char buf[64];
  for (const auto& row : rows) {
    for (const double x : row.inputs) {
      std::snprintf(buf, sizeof(buf), "%.12g", x);
      out += buf;
      out += ',';
    }
    std::snprintf(buf, sizeof(buf), "%.12g", row.value);
    out += buf;
    out += '\n';
  }
  return out;
}

} // namespace fuzzymt

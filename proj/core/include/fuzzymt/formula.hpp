// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fuzzymt/algebra.hpp"
#include "fuzzymt/truth_value.hpp"

namespace fuzzymt {

/// AST of a fuzzy propositional sentence over named atoms. Immutable;
/// subtrees are shared.
class Formula {
public:
  enum class Kind { Atom, Const, Not, And, Or, Implies };

  static Formula atom(std::string name);
  static Formula constant(TruthValue v);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  Kind kind() const;
  const std::string& atom_name() const;   // Atom only
  TruthValue constant_value() const;      // Const only
  Formula lhs() const;                    // unary operand lives here too
  Formula rhs() const;                    // binary nodes only

  /// Structural equality.
  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  /// Atom names, sorted, deduplicated.
  std::vector<std::string> atoms() const;

  /// Concrete syntax with minimal parentheses; parse(print(f)) == f.
  std::string print() const;

  struct Node; // defined in formula.cpp

private:
  explicit Formula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses the grammar: atoms [A-Za-z_][A-Za-z0-9_]*, real constants in
/// [0,1], `!`/`not`, `&`/`and`, `|`/`or`, `->`, parentheses. Precedence
/// not > and > or > ->; `->` right-associative, `&`/`|` left-associative.
/// Throws ParseError with a 1-based position on malformed input.
Formula parse(const std::string& text);

using AtomValuation = std::map<std::string, TruthValue>;

/// Evaluates f under the algebra's connective semantics. Every atom of f
/// must be bound in v.
TruthValue evaluate(const Formula& f, const AtomValuation& v,
                    const Algebra& alg);

struct TruthTable {
  std::vector<std::string> atoms;
  struct Row {
    std::vector<double> inputs; // one per atom, same order as `atoms`
    double value;
  };
  std::vector<Row> rows;

  /// CSV with a header row of atom names followed by "value"; numbers
  /// printed with up to 12 significant digits.
  std::string to_csv() const;
};

/// Enumerates each atom over {0, step, 2*step, ..., 1} in lexicographic
/// atom-name order. At most 4 atoms.
TruthTable truth_table(const Formula& f, const Algebra& alg, double step);

} // namespace fuzzymt

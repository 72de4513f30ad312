// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "fuzzymt/truth_value.hpp"

namespace fuzzymt {

enum class TNormFamily { Godel, Product, Lukasiewicz, Custom };

std::string to_string(TNormFamily family);

/// A t-norm together with the connectives derived from it: the De Morgan
/// dual t-conorm, the S- and R-implications and the R-negation. The three
/// built-in families use closed forms; custom t-norms fall back to the
/// numeric residuum.
class TNorm {
public:
  using BinaryFn = std::function<double(double, double)>;

  static TNorm godel() { return TNorm(TNormFamily::Godel); }
  static TNorm product() { return TNorm(TNormFamily::Product); }
  static TNorm lukasiewicz() { return TNorm(TNormFamily::Lukasiewicz); }
  static TNorm custom(BinaryFn fn, std::string name = "custom");

  TNormFamily family() const { return family_; }
  const std::string& name() const { return name_; }

  /// Conjunction: min / product / bounded difference, or the custom rule.
  TruthValue apply(TruthValue x, TruthValue y) const;

  /// Disjunction via the dual t-conorm, 1 - T(1-x, 1-y).
  TruthValue conorm(TruthValue x, TruthValue y) const;

  /// S-implication: conorm(1-x, y).
  TruthValue implies_s(TruthValue x, TruthValue y) const;

  /// R-implication: the residuum max{ z : T(z, x) <= y }.
  TruthValue implies_r(TruthValue x, TruthValue y) const;

  /// R-negation: the residuum with an always-false consequent, x => 0.
  TruthValue negate_r(TruthValue x) const;

private:
  explicit TNorm(TNormFamily family) : family_(family) {}

  double raw(double x, double y) const;

  TNormFamily family_;
  BinaryFn fn_;
  std::string name_;
};

/// Strong negation, 1 - x. Involutive; independent of the t-norm.
inline TruthValue negate_s(TruthValue x) { return TruthValue(1.0 - x.value()); }

/// Numeric residuum sup{ z : fn(z, x) <= y } by bisection on [0,1],
/// accurate to tol. fn must be monotone in its first argument.
TruthValue residuum_numeric(const TNorm::BinaryFn& fn, TruthValue x,
                            TruthValue y, double tol);

/// Result of checking one t-norm axiom on sampled inputs.
struct AxiomResult {
  bool pass = true;
  // Sample at which the axiom first failed, when pass is false. Unused
  // slots of the triple are zero (commutativity and neutrality use two
  // and one value respectively).
  std::optional<std::array<double, 3>> counterexample;
};

struct LawReport {
  AxiomResult commutativity; // axiom 1
  AxiomResult monotonicity;  // axiom 2
  AxiomResult associativity; // axiom 3
  AxiomResult neutral;       // axiom 4
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  bool all_pass() const {
    return commutativity.pass && monotonicity.pass && associativity.pass &&
           neutral.pass;
  }
};

/// Checks axioms 1-4 on deterministic pseudo-random samples. Built-in
/// families always pass; custom t-norms must pass before use in inference.
/// Tolerance for the equational axioms is 1e-12.
LawReport check_tnorm_laws(const TNorm& tnorm, std::uint64_t samples,
                           std::uint64_t seed);

} // namespace fuzzymt

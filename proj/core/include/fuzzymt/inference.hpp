// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "fuzzymt/algebra.hpp"
#include "fuzzymt/truth_value.hpp"

namespace fuzzymt {

/// Valuations of the two premises of the fuzzy Modus Tollens:
/// P1 is the implication "H => (P(E|H) >= alpha)", P2 the observed
/// "not (P(E|H) >= alpha)".
struct MTPremises {
  TruthValue nu_p1;
  TruthValue nu_p2;
};

enum class MTStatus { Consistent, Inconsistent };

/// Machine-readable reason for an inconsistent (or otherwise flagged)
/// inference. Inconsistency is data, not an exception.
struct MTDiagnostic {
  std::string code;
  std::string message;
  std::optional<double> offending;
};

struct MTResult {
  MTStatus status = MTStatus::Consistent;
  std::optional<TruthValue> nu_not_h;      // present iff Consistent
  std::optional<TruthValue> nu_h;          // present iff derivable
  std::optional<TruthValue> nu_consequent; // derived value of P(E|H) >= alpha
  std::optional<MTDiagnostic> diagnostic;
  // nu_h clamped to 1 because p exceeded nu_p1 (product R-implication with
  // S-negation).
  bool boundary = false;
  // S-convention conclusion T(nu_p1, nu_p2) with fractional nu_p2: a
  // generalization beyond the nu_p2 = 1 case treated analytically.
  bool generalized = false;

  bool consistent() const { return status == MTStatus::Consistent; }
};

/// Outcome of deriving the consequent's truth value from nu(P2) under the
/// algebra's negation.
struct ConsequentOutcome {
  std::optional<TruthValue> value;
  std::optional<MTDiagnostic> diagnostic;
};

/// Derives nu(P(E|H) >= alpha) from nu(P2). Under S-negation (and the
/// Lukasiewicz R-negation) this is 1 - nu_p2; the Godel/product R-negation
/// admits only nu_p2 in {0,1} and is inconsistent for fractional values.
ConsequentOutcome consequent_value(const Algebra& alg,
                                   const MTPremises& premises);

/// Zadeh's compositional Modus Tollens: nu(not H) = T(nu(contrapositive
/// of P1), nu(P2)), with the contrapositive valuation extracted from
/// nu(P1) per convention mix, and a consistency verdict.
MTResult modus_tollens(const Algebra& alg, const MTPremises& premises);

struct ContrapositiveReport {
  TruthValue forward;
  TruthValue contrapositive;
  bool symmetric; // equal within 1e-12
};

/// Evaluates nu(x => y) and nu(!y => !x) under the algebra's implication
/// and negation.
ContrapositiveReport contrapositive_check(const Algebra& alg, TruthValue x,
                                          TruthValue y);

} // namespace fuzzymt

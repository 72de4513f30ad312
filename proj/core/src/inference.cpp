// SPDX-License-Identifier: Apache-2.0
#include "fuzzymt/inference.hpp"

#include <algorithm>
#include <cmath>

namespace fuzzymt {

namespace {

constexpr double kSymTol = 1e-12;

MTDiagnostic diag(std::string code, std::string message,
                  std::optional<double> offending = std::nullopt) {
  return MTDiagnostic{std::move(code), std::move(message), offending};
}

MTResult inconsistent(MTDiagnostic d,
                      std::optional<TruthValue> consequent = std::nullopt) {
  MTResult r;
  r.status = MTStatus::Inconsistent;
  r.nu_consequent = consequent;
  r.diagnostic = std::move(d);
  return r;
}

bool is_crisp(double v) { return v == 0.0 || v == 1.0; }

// Classical pass-through for degenerate premise pairs (both in {0,1}):
// classical contrapositive symmetry makes the contrapositive valuation
// equal nu_p1, so nu(not H) = AND(nu_p1, nu_p2). nu(H) is pinned only
// when the consequent is false (nu_p2 = 1).
MTResult classical_passthrough(double nu_p1, double nu_p2) {
  MTResult r;
  r.status = MTStatus::Consistent;
  r.nu_not_h = TruthValue(std::min(nu_p1, nu_p2));
  if (nu_p2 == 1.0) {
    r.nu_h = TruthValue(1.0 - nu_p1);
  }
  return r;
}

// S-implication (any t-norm) and Lukasiewicz R-implication: contrapositive
// symmetry holds, so the compositional rule reduces to T(nu_p1, nu_p2).
MTResult symmetric_case(const Algebra& alg, double nu_p1, double nu_p2) {
  MTResult r;
  r.status = MTStatus::Consistent;
  r.nu_not_h = alg.tnorm().apply(TruthValue(nu_p1), TruthValue(nu_p2));
  if (nu_p2 == 1.0) {
    // The implication's value at a false consequent is 1 - nu(H), for all
    // three built-in t-norms, so nu(H) is recoverable.
    r.nu_h = TruthValue(1.0 - nu_p1);
  } else {
    r.generalized = true;
  }
  return r;
}

MTResult rr_godel_product(const Algebra& alg, double nu_p1, double nu_p2) {
  const auto cons = consequent_value(alg, {TruthValue(nu_p1),
                                           TruthValue(nu_p2)});
  if (!cons.value) {
    return inconsistent(*cons.diagnostic);
  }
  if (!is_crisp(nu_p1)) {
    // The residuum at a crisp consequent evaluates to 0 or 1 only; a
    // fractional nu_p1 is unreachable.
    return inconsistent(
        diag("rr_fractional_p1",
             "Godel/product R-implication with R-negation can only value "
             "P1 at 0 or 1; fractional nu_p1 is unreachable",
             nu_p1),
        cons.value);
  }
  MTResult r = classical_passthrough(nu_p1, nu_p2);
  r.nu_consequent = cons.value;
  return r;
}

MTResult rs_product(const Algebra& alg, double nu_p1, double nu_p2) {
  const double p = 1.0 - nu_p2; // S-negation of P2
  MTResult r;
  r.nu_consequent = TruthValue(p);
  if (p == 0.0) {
    if (is_crisp(nu_p1)) {
      MTResult out = classical_passthrough(nu_p1, nu_p2);
      out.nu_consequent = r.nu_consequent;
      return out;
    }
    return inconsistent(
        diag("rs_zero_consequent",
             "a zero-valued consequent forces the product R-implication to "
             "0 or 1; fractional nu_p1 needs p > 0",
             nu_p1),
        r.nu_consequent);
  }
  if (nu_p1 == 1.0) {
    // The implication is 1 whenever nu(H) <= p: consistent but nu(H) is
    // not pinned, so no conclusion can be composed.
    return inconsistent(
        diag("rs_p1_not_fractional",
             "nu_p1 = 1 with p > 0 leaves nu(H) underdetermined (any value "
             "<= p); the consistency solution requires nu_p1 < 1",
             nu_p1),
        r.nu_consequent);
  }
  if (nu_p1 == 0.0) {
    return inconsistent(
        diag("rs_p1_zero",
             "the product R-implication with consequent p > 0 is never 0",
             nu_p1),
        r.nu_consequent);
  }
  // Consistency pins nu(H) = min(1, p / nu_p1); the compositional rule then
  // yields nu(not H) = 1 - p / nu_p1 when p <= nu_p1.
  r.status = MTStatus::Consistent;
  const double ratio = p / nu_p1;
  if (ratio <= 1.0) {
    const double nu_h = ratio;
    r.nu_h = TruthValue(nu_h);
    r.nu_not_h = TruthValue(1.0 - nu_h);
  } else {
    r.nu_h = TruthValue(1.0);
    r.nu_not_h = TruthValue(0.0);
    r.boundary = true;
  }
  return r;
}

MTResult rs_godel(double nu_p1, double nu_p2) {
  const double p = 1.0 - nu_p2;
  MTResult r;
  r.nu_consequent = TruthValue(p);
  if (p == 0.0) {
    if (is_crisp(nu_p1)) {
      MTResult out = classical_passthrough(nu_p1, nu_p2);
      out.nu_consequent = r.nu_consequent;
      return out;
    }
    return inconsistent(
        diag("rs_zero_consequent",
             "a zero-valued consequent forces the Godel R-implication to 0 "
             "or 1; fractional nu_p1 needs p > 0",
             nu_p1),
        r.nu_consequent);
  }
  // With consequent p > 0 the Godel residuum is 1 (if nu(H) <= p) or p;
  // the only fractional value P1 can take is exactly p.
  if (nu_p1 != p) {
    return inconsistent(
        diag("rs_godel_requires_p1_equals_p",
             "the Godel R-implication with S-negation requires nu(P1) = p "
             "= 1 - nu(P2) exactly",
             nu_p1),
        r.nu_consequent);
  }
  // nu(H) is only constrained to exceed p, so it stays underivable;
  // nu_not_h reports the limiting admissible valuation 1 - nu_p1.
  r.status = MTStatus::Consistent;
  r.nu_not_h = TruthValue(1.0 - nu_p1);
  return r;
}

} // namespace

ConsequentOutcome consequent_value(const Algebra& alg,
                                   const MTPremises& premises) {
  const double nu_p2 = premises.nu_p2.value();
  if (alg.convention().negation == NegationConvention::S ||
      alg.tnorm().family() == TNormFamily::Lukasiewicz) {
    return {TruthValue(1.0 - nu_p2), std::nullopt};
  }
  // Godel/product R-negation maps only 0 <-> 1.
  if (nu_p2 == 0.0) return {TruthValue(1.0), std::nullopt};
  if (nu_p2 == 1.0) return {TruthValue(0.0), std::nullopt};
  return {std::nullopt,
          diag("r_negation_fractional_p2",
               "the Godel/product R-negation admits no fractional nu(P2)",
               nu_p2)};
}

MTResult modus_tollens(const Algebra& alg, const MTPremises& premises) {
  const double nu_p1 = premises.nu_p1.value();
  const double nu_p2 = premises.nu_p2.value();
  const TNormFamily family = alg.tnorm().family();
  const bool s_impl = alg.convention().implication == ImplicationConvention::S;
  const bool s_neg = alg.convention().negation == NegationConvention::S;

  // The Lukasiewicz R-negation is the strong negation, so every
  // Lukasiewicz mix collapses onto the contrapositive-symmetric case.
  const bool luka = family == TNormFamily::Lukasiewicz;

  if ((s_impl && s_neg) || luka) {
    MTResult r = symmetric_case(alg, nu_p1, nu_p2);
    r.nu_consequent = TruthValue(1.0 - nu_p2);
    return r;
  }

  if (s_impl && !s_neg) {
    // S-implication with the Godel/product R-negation: only the crisp
    // fragment is analyzable.
    const auto cons = consequent_value(alg, premises);
    if (!cons.value) {
      return inconsistent(*cons.diagnostic);
    }
    if (is_crisp(nu_p1)) {
      MTResult r = classical_passthrough(nu_p1, nu_p2);
      r.nu_consequent = cons.value;
      return r;
    }
    return inconsistent(
        diag("sr_mix_not_analyzable",
             "S-implication with Godel/product R-negation has no "
             "contrapositive extraction for fractional nu_p1",
             nu_p1),
        cons.value);
  }

  // R-implication from here on.
  if (!s_neg) {
    return rr_godel_product(alg, nu_p1, nu_p2);
  }
  if (family == TNormFamily::Product) {
    return rs_product(alg, nu_p1, nu_p2);
  }
  if (family == TNormFamily::Godel) {
    return rs_godel(nu_p1, nu_p2);
  }
  // Custom t-norm under the R convention: no general contrapositive
  // extraction exists.
  return inconsistent(diag(
      "custom_r_implication_unsupported",
      "Modus Tollens under an R-implication is only analyzed for the "
      "built-in t-norms"));
}

ContrapositiveReport contrapositive_check(const Algebra& alg, TruthValue x,
                                          TruthValue y) {
  const TruthValue forward = alg.imply(x, y);
  const TruthValue contrapositive = alg.imply(alg.negate(y), alg.negate(x));
  const bool symmetric =
      std::abs(forward.value() - contrapositive.value()) <= kSymTol;
  return {forward, contrapositive, symmetric};
}

} // namespace fuzzymt

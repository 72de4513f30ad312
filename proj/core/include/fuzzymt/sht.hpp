// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "fuzzymt/algebra.hpp"
#include "fuzzymt/inference.hpp"

namespace fuzzymt {

/// A statistical hypothesis-testing scenario: significance level alpha,
/// measurement-precision error of P2, and the exponent of the premise
/// valuation family nu(P1) = 1 - alpha^n.
class ShtScenario {
public:
  ShtScenario(double alpha, double p_err, double model_n, Algebra algebra);

  double alpha() const { return alpha_; }
  double p_err() const { return p_err_; }
  double model_n() const { return model_n_; }
  const Algebra& algebra() const { return algebra_; }

private:
  double alpha_;
  double p_err_;
  double model_n_;
  Algebra algebra_;
};

/// Upper-tail test statistic: evidence of the form S >= s against a
/// normal null.
struct TestStatistic {
  double observed;
  double null_mean;
  double null_sd; // > 0
};

/// nu_p1 = 1 - alpha^n, nu_p2 = 1 - p_err.
MTPremises premise_valuations(const ShtScenario& scenario);

/// Upper-tail p-value 1 - Phi((observed - mean)/sd) for the standard
/// normal CDF Phi, via the complementary error function
/// (Phi(z) = erfc(-z/sqrt(2))/2); absolute accuracy well under 1e-7.
double p_value_upper(const TestStatistic& stat);

struct ShtVerdict {
  double alpha;
  double p_err;
  double model_n;
  MTPremises premises;
  // Absent when P2 was not established (observed p-value >= alpha).
  std::optional<MTResult> result;
  std::optional<double> p_value; // present when derived from a statistic
  bool p2_established = true;
  std::string verdict; // human-readable sentence
};

/// Composes premise_valuations with modus_tollens and renders a verdict.
ShtVerdict run_sht(const ShtScenario& scenario);

/// Same, but first computes the upper-tail p-value of `stat`; if the
/// p-value is >= alpha, P2 does not hold and no inference is attempted.
ShtVerdict run_sht(const ShtScenario& scenario, const TestStatistic& stat);

} // namespace fuzzymt

// SPDX-License-Identifier: Apache-2.0
#include "fuzzymt/sht.hpp"

#include <cmath>
#include <sstream>

namespace fuzzymt {

ShtScenario::ShtScenario(double alpha, double p_err, double model_n,
                         Algebra algebra)
    : alpha_(alpha), p_err_(p_err), model_n_(model_n),
      algebra_(std::move(algebra)) {
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 1.0) {
    // alpha = 0 makes P1 a tautology; it is not a test scenario.
    throw ValueError("alpha must be in (0,1]");
  }
  if (!std::isfinite(p_err) || p_err < 0.0 || p_err >= 1.0) {
    throw ValueError("p_err must be in [0,1)");
  }
  if (!std::isfinite(model_n) || model_n <= 0.0) {
    throw ValueError("model_n must be positive");
  }
}

MTPremises premise_valuations(const ShtScenario& scenario) {
  return {TruthValue(1.0 - std::pow(scenario.alpha(), scenario.model_n())),
          TruthValue(1.0 - scenario.p_err())};
}

double p_value_upper(const TestStatistic& stat) {
  if (!std::isfinite(stat.observed) || !std::isfinite(stat.null_mean) ||
      !std::isfinite(stat.null_sd)) {
    throw ValueError("test statistic fields must be finite");
  }
  if (!(stat.null_sd > 0.0)) {
    throw ValueError("null_sd must be positive");
  }
  const double z = (stat.observed - stat.null_mean) / stat.null_sd;
  return 0.5 * std::erfc(z / std::sqrt(2.0));
}

namespace {

std::string render_sentence(const MTResult& result) {
  if (!result.consistent()) {
    return "no sound inference under this algebra (" +
           result.diagnostic->code + ")";
  }
  std::ostringstream os;
  os << "hypothesis rejected with truth value " << result.nu_not_h->value();
  return os.str();
}

ShtVerdict make_verdict(const ShtScenario& scenario) {
  ShtVerdict v;
  v.alpha = scenario.alpha();
  v.p_err = scenario.p_err();
  v.model_n = scenario.model_n();
  v.premises = premise_valuations(scenario);
  v.result = modus_tollens(scenario.algebra(), v.premises);
  v.verdict = render_sentence(*v.result);
  return v;
}

} // namespace

ShtVerdict run_sht(const ShtScenario& scenario) {
  return make_verdict(scenario);
}

ShtVerdict run_sht(const ShtScenario& scenario, const TestStatistic& stat) {
  const double pv = p_value_upper(stat);
  if (pv >= scenario.alpha()) {
    // P2 asserts P(E|H) < alpha; the observed p-value contradicts it.
    ShtVerdict v;
    v.alpha = scenario.alpha();
    v.p_err = scenario.p_err();
    v.model_n = scenario.model_n();
    v.premises = premise_valuations(scenario);
    v.p_value = pv;
    v.p2_established = false;
    v.verdict = "P2 not established";
    return v;
  }
  ShtVerdict v = make_verdict(scenario);
  v.p_value = pv;
  return v;
}

} // namespace fuzzymt

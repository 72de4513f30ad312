// SPDX-License-Identifier: Apache-2.0
#include "fuzzymt/tnorm.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <utility>

#include "fuzzymt/algebra.hpp"

namespace fuzzymt {

namespace {

constexpr double kLawTol = 1e-12;
constexpr double kResiduumTol = 1e-12;

} // namespace

std::string to_string(TNormFamily family) {
  switch (family) {
  case TNormFamily::Godel: return "godel";
  case TNormFamily::Product: return "product";
  case TNormFamily::Lukasiewicz: return "lukasiewicz";
  case TNormFamily::Custom: return "custom";
  }
  return "?";
}

std::string to_string(ImplicationConvention c) {
  return c == ImplicationConvention::S ? "s" : "r";
}

std::string to_string(NegationConvention c) {
  return c == NegationConvention::S ? "s" : "r";
}

TNorm TNorm::custom(BinaryFn fn, std::string name) {
  TNorm t(TNormFamily::Custom);
  t.fn_ = std::move(fn);
  t.name_ = std::move(name);
  return t;
}

double TNorm::raw(double x, double y) const {
  switch (family_) {
  case TNormFamily::Godel:
    return std::min(x, y);
  case TNormFamily::Product:
    return x * y;
  case TNormFamily::Lukasiewicz:
    return std::max(0.0, x + y - 1.0);
  case TNormFamily::Custom: {
    const double r = fn_(x, y);
    if (!std::isfinite(r) || r < 0.0 || r > 1.0) {
      std::ostringstream os;
      os << "custom t-norm '" << name_ << "' returned " << r
         << " outside [0,1] at (" << x << ", " << y << ")";
      throw EvaluationError(os.str());
    }
    return r;
  }
  }
  return 0.0;
}

TruthValue TNorm::apply(TruthValue x, TruthValue y) const {
  return TruthValue(raw(x.value(), y.value()));
}

TruthValue TNorm::conorm(TruthValue x, TruthValue y) const {
  const double a = x.value(), b = y.value();
  switch (family_) {
  case TNormFamily::Godel:
    return TruthValue(std::max(a, b));
  case TNormFamily::Product:
    return TruthValue(a + b - a * b);
  case TNormFamily::Lukasiewicz:
    return TruthValue(std::min(1.0, a + b));
  case TNormFamily::Custom:
    return TruthValue(1.0 - raw(1.0 - a, 1.0 - b));
  }
  return TruthValue(0.0);
}

TruthValue TNorm::implies_s(TruthValue x, TruthValue y) const {
  return conorm(TruthValue(1.0 - x.value()), y);
}

TruthValue TNorm::implies_r(TruthValue x, TruthValue y) const {
  const double a = x.value(), b = y.value();
  // Branch on a <= b first: it covers a = 0 before any division.
  switch (family_) {
  case TNormFamily::Godel:
    return TruthValue(a <= b ? 1.0 : b);
  case TNormFamily::Product:
    return TruthValue(a <= b ? 1.0 : b / a);
  case TNormFamily::Lukasiewicz:
    return TruthValue(std::min(1.0, 1.0 - a + b));
  case TNormFamily::Custom:
    return residuum_numeric([this](double p, double q) { return raw(p, q); },
                            x, y, kResiduumTol);
  }
  return TruthValue(0.0);
}

TruthValue TNorm::negate_r(TruthValue x) const {
  switch (family_) {
  case TNormFamily::Godel:
  case TNormFamily::Product:
    return TruthValue(x.value() == 0.0 ? 1.0 : 0.0);
  case TNormFamily::Lukasiewicz:
    // The Lukasiewicz residuum at a false consequent is the canonical
    // negation 1 - x.
    return TruthValue(1.0 - x.value());
  case TNormFamily::Custom:
    return implies_r(x, TruthValue(0.0));
  }
  return TruthValue(0.0);
}

TruthValue residuum_numeric(const TNorm::BinaryFn& fn, TruthValue x,
                            TruthValue y, double tol) {
  if (!(tol > 0.0)) {
    throw ValueError("residuum tolerance must be positive");
  }
  const double a = x.value(), b = y.value();
  if (fn(0.0, a) > b) {
    // T(0, a) = 0 <= b for every t-norm; a violation means fn is not one.
    throw LawViolationError(
        "residuum bracketing failed: fn(0, x) > y, fn is not a t-norm");
  }
  if (fn(1.0, a) <= b) {
    return TruthValue(1.0);
  }
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (fn(mid, a) <= b) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return TruthValue(lo);
}

LawReport check_tnorm_laws(const TNorm& tnorm, std::uint64_t samples,
                           std::uint64_t seed) {
  if (samples < 1) {
    throw ValueError("law check needs at least one sample");
  }
  LawReport report;
  report.samples = samples;
  report.seed = seed;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto t = [&](double p, double q) {
    return tnorm.apply(TruthValue(p), TruthValue(q)).value();
  };

  for (std::uint64_t i = 0; i < samples; ++i) {
    const double x = unit(rng), y = unit(rng), z = unit(rng), w = unit(rng);

    if (report.commutativity.pass &&
        std::abs(t(x, y) - t(y, x)) > kLawTol) {
      report.commutativity.pass = false;
      report.commutativity.counterexample = {x, y, 0.0};
    }
    if (report.monotonicity.pass) {
      const double xlo = std::min(x, w), xhi = std::max(x, w);
      const double ylo = std::min(y, z), yhi = std::max(y, z);
      if (t(xlo, ylo) > t(xhi, yhi) + kLawTol) {
        report.monotonicity.pass = false;
        report.monotonicity.counterexample = {xlo, ylo, xhi};
      }
    }
    if (report.associativity.pass &&
        std::abs(t(x, t(y, z)) - t(t(x, y), z)) > kLawTol) {
      report.associativity.pass = false;
      report.associativity.counterexample = {x, y, z};
    }
    if (report.neutral.pass && std::abs(t(x, 1.0) - x) > kLawTol) {
      report.neutral.pass = false;
      report.neutral.counterexample = {x, 0.0, 0.0};
    }
  }
  return report;
}

} // namespace fuzzymt

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <string>

#include "fuzzymt/errors.hpp"

namespace fuzzymt {

/// A degree of truth in [0,1]. Out-of-range construction throws; values
/// are never silently clamped.
class TruthValue {
public:
  TruthValue() : value_(0.0) {}

  explicit TruthValue(double v) : value_(v) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw ValueError("truth value " + std::to_string(v) +
                       " outside [0,1]");
    }
  }

  double value() const { return value_; }

  bool operator==(const TruthValue& other) const {
    return value_ == other.value_;
  }
  bool operator!=(const TruthValue& other) const {
    return value_ != other.value_;
  }

private:
  double value_;
};

inline TruthValue truth(double v) { return TruthValue(v); }

} // namespace fuzzymt

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "fuzzymt/tnorm.hpp"

namespace fuzzymt {

enum class ImplicationConvention { S, R };
enum class NegationConvention { S, R };

std::string to_string(ImplicationConvention c);
std::string to_string(NegationConvention c);

struct Convention {
  ImplicationConvention implication = ImplicationConvention::S;
  NegationConvention negation = NegationConvention::S;
};

/// A t-norm plus an implication/negation convention: fixes the semantics
/// of every connective. Immutable after construction.
class Algebra {
public:
  Algebra(TNorm tnorm, Convention convention)
      : tnorm_(std::move(tnorm)), convention_(convention) {}

  const TNorm& tnorm() const { return tnorm_; }
  const Convention& convention() const { return convention_; }

  TruthValue conjoin(TruthValue x, TruthValue y) const {
    return tnorm_.apply(x, y);
  }

  TruthValue negate(TruthValue x) const {
    return convention_.negation == NegationConvention::S
               ? negate_s(x)
               : tnorm_.negate_r(x);
  }

  // Disjunction is 1 - T(neg(x), neg(y)) with the convention's negation;
  // under the S convention this is exactly the t-conorm.
  TruthValue disjoin(TruthValue x, TruthValue y) const {
    return TruthValue(1.0 - tnorm_.apply(negate(x), negate(y)).value());
  }

  TruthValue imply(TruthValue x, TruthValue y) const {
    return convention_.implication == ImplicationConvention::S
               ? tnorm_.implies_s(x, y)
               : tnorm_.implies_r(x, y);
  }

private:
  TNorm tnorm_;
  Convention convention_;
};

} // namespace fuzzymt

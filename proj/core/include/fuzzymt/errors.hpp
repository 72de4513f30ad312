// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace fuzzymt {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A real value fell outside its admissible domain (e.g. a truth value
/// outside [0,1], a non-finite input).
class ValueError : public Error {
public:
  explicit ValueError(const std::string& what) : Error(what) {}
};

/// A custom connective produced an out-of-range result, or an atom was
/// unbound during evaluation.
class EvaluationError : public Error {
public:
  explicit EvaluationError(const std::string& what) : Error(what) {}
};

/// A custom t-norm violated one of the algebraic laws it is required to
/// satisfy (detected during the numeric residuum or the law checker).
class LawViolationError : public Error {
public:
  explicit LawViolationError(const std::string& what) : Error(what) {}
};

/// A request exceeded a hard capacity bound (e.g. truth table atom cap).
class CapacityError : public Error {
public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

/// Syntax error with 1-based source position and the tokens that would
/// have been accepted.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line, int column,
             std::string expected)
      : Error(what), line_(line), column_(column),
        expected_(std::move(expected)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }

private:
  int line_;
  int column_;
  std::string expected_;
};

} // namespace fuzzymt

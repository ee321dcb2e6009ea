#pragma once

#include <stdexcept>
#include <string>

namespace natcd {

/// A non-finite value appeared while evaluating family functions or an
/// objective (e.g. exp overflow in the poisson log-partition).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Root bracketing failed to enclose a sign change after the doubling cap.
/// For logistic data this typically signals separation.
class DivergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// An iterative reference solver exhausted its iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A regularization path cannot be constructed because every penalised
/// component of w is zero.
class DegeneratePathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Synthetic data generation could not satisfy its constraints
/// (e.g. the class-balance requirement after the redraw cap).
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tabular input failed to parse; carries the 1-based location.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, long row, long column)
      : std::runtime_error(message + " (row " + std::to_string(row) +
                           ", column " + std::to_string(column) + ")"),
        row(row),
        column(column) {}

  long row;
  long column;
};

}  // namespace natcd

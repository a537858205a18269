#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace elastic {

/// Input failed validation (shape, sign, parse). Message names the offending element.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A dissimilarity is zero or negative, which leaves elastic stress undefined.
class ZeroDissimilarityError : public ValidationError {
 public:
  ZeroDissimilarityError(std::size_t pair_index, const std::string& what)
      : ValidationError(what), pair_index_(pair_index) {}
  std::size_t pair_index() const noexcept { return pair_index_; }

 private:
  std::size_t pair_index_;
};

/// Text input could not be parsed. Line and column are 1-based.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                        ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A distance is zero where the loss form needs its logarithm or reciprocal.
class ZeroDistanceError : public std::domain_error {
 public:
  ZeroDistanceError(std::size_t pair_index, const std::string& what)
      : std::domain_error(what), pair_index_(pair_index) {}
  std::size_t pair_index() const noexcept { return pair_index_; }

 private:
  std::size_t pair_index_;
};

/// All points coincide (or all relevant distances vanish).
class DegenerateConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear algebra failed (eigen-solver or factorization).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Stress became NaN or infinite during iteration. Carries the trace up to the failure.
class NonFiniteStressError : public NumericalError {
 public:
  NonFiniteStressError(int iteration, std::vector<double> trace, const std::string& what)
      : NumericalError(what), iteration_(iteration), trace_(std::move(trace)) {}
  int iteration() const noexcept { return iteration_; }
  const std::vector<double>& trace() const noexcept { return trace_; }

 private:
  int iteration_;
  std::vector<double> trace_;
};

/// A builtin dataset name is unknown, or known but not bundled in this build.
class DatasetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace elastic

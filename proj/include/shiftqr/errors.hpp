#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shiftqr {

/// Shape or index precondition violated.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A non-finite value appeared where only finite values are allowed.
class NumericalBreakdown : public std::runtime_error {
 public:
  NumericalBreakdown(const std::string& what, std::size_t iteration = 0)
      : std::runtime_error(what), iteration_(iteration) {}

  /// Outer iteration at which the breakdown was detected (0 = before the loop).
  std::size_t iteration() const noexcept { return iteration_; }

 private:
  std::size_t iteration_;
};

/// Gram-Schmidt hit a pivot column whose norm fell below the rank threshold.
class RankDeficiency : public std::runtime_error {
 public:
  RankDeficiency(const std::string& what, std::size_t column)
      : std::runtime_error(what), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Malformed matrix file. Line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace shiftqr

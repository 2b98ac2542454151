#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invqm {

/// Raised when an operation's documented precondition does not hold
/// (rank mismatch, non-square matrix, word outside the required subgroup).
/// The CLI maps it to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax or name-resolution failure in the presentation DSL.
class ParseError : public PreconditionError {
 public:
  ParseError(std::string const& what, std::size_t line, std::size_t column)
      : PreconditionError(what + " at line " + std::to_string(line)
                          + ", column " + std::to_string(column)),
        _line(line),
        _column(column) {}

  [[nodiscard]] std::size_t line() const noexcept { return _line; }
  [[nodiscard]] std::size_t column() const noexcept { return _column; }

 private:
  std::size_t _line;
  std::size_t _column;
};

/// Homogenization did not stabilize within the requested horizon.
class HorizonExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace invqm

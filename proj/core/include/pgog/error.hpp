#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgog {

/// Raised on any contract violation (bad parameters, foreign elements,
/// enumeration overflow, malformed input).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed the configured element bound.
class SizeGuardExceeded : public Error {
 public:
  using Error::Error;
};

/// Syntax error with a 1-based position in the source text.
class ParseError : public Error {
 public:
  ParseError(std::string const& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        reason_(what),
        line_(line),
        column_(column) {}

  std::string const& reason() const noexcept { return reason_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string reason_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace pgog

#pragma once

#include <stdexcept>
#include <string>

namespace gc4 {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (scenario scripts, word literals, labels).
/// Positions are 1-based; column 0 means "unknown".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A scenario asked for an operation whose preconditions do not hold
/// (unknown torus, surgered torus, inconsistent invariants, ...).
class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace gc4

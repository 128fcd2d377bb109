#pragma once

#include <stdexcept>
#include <string>

namespace qubokit {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector/matrix size disagreement (assignment length, row length, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied parameter is outside its documented domain
// (ell >= 0, u <= 0, non-positive knapsack item, unbound oracle, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Contradictory or out-of-range variable restriction.
class RestrictionError : public Error {
 public:
  using Error::Error;
};

// Query would enumerate more free variables than the practical guard allows.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Instance violates the subclass a specialised solver requires.
class SubclassError : public Error {
 public:
  using Error::Error;
};

// A postcondition that depends on the caller's claim failed
// (argmin extraction against a wrong minimum, repair of a non-optimal input).
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// Instance shape the reduction cannot handle (negative right-hand side).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid model data (zero denominator and friends).
class MalformedError : public Error {
 public:
  using Error::Error;
};

// Text input rejected; always carries a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace qubokit

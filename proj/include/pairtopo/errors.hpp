#pragma once

#include <stdexcept>
#include <string>

namespace pairtopo {

/// Root of every error thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A configured resource limit (Groebner steps, DNF clauses, K-cells, degree)
/// was hit. Never a silent truncation.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Partial function evaluated outside its domain, e.g. f_{n,i} on a dependent
/// basis.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Input outside the supported formula fragment.
class UnsupportedShape : public Error {
 public:
  using Error::Error;
};

class MissingParameter : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant was violated. Always a bug.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

}  // namespace pairtopo

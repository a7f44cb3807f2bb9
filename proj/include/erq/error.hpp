#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace erq {

/// Base class of every error the library reports. Callers that only care
/// about "bad input vs. bug" can catch Error and InvariantViolation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of a binary operation (or a point) disagree on the number of
/// variables.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on an argument does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// even_reduce hit an odd exponent in one of the selected variables.
class NotEvenError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Something the library proved to itself turned out false (for example a
/// decomposition that does not recompose). Always a bug, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Polynomial text could not be parsed. `column` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t column, const std::string& message)
      : Error("column " + std::to_string(column) + ": " + message),
        column_(column),
        reason_(message) {}

  std::size_t column() const noexcept { return column_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t column_;
  std::string reason_;
};

}  // namespace erq

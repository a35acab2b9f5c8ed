#pragma once

#include <stdexcept>
#include <string>

namespace evdkit {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Parameter vector violates a family's parameter space.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

// Iterative numerical procedure failed (bracketing, quadrature, optimizer).
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

// Dataset unusable for the requested operation (too short, degenerate).
class DataError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. Carries the 1-based row and the column name.
class ParseError : public DataError {
 public:
  ParseError(const std::string& what, std::size_t row, std::string column)
      : DataError(what), row_(row), column_(std::move(column)) {}

  [[nodiscard]] std::size_t row() const noexcept { return row_; }
  [[nodiscard]] const std::string& column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::string column_;
};

}  // namespace evdkit

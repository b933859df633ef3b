#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcx {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension mismatch or non-square input.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Invalid argument value: out-of-range rank, non-finite entries, bad config.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A documented operation precondition does not hold for the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Iterative solver stopped before reaching its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Entry too close to zero to sign in strict mode.
class DegenerateSignError : public Error {
 public:
  DegenerateSignError(const std::string& what, std::size_t row,
                      std::size_t col, double value)
      : Error(what), row_(row), col_(col), value_(value) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t row_;
  std::size_t col_;
  double value_;
};

// Reconstruction left an entry within the residual guard band, so its sign
// cannot be trusted.
class SignAmbiguityError : public Error {
 public:
  SignAmbiguityError(const std::string& what, std::size_t row,
                     std::size_t col, double value, double guard)
      : Error(what), row_(row), col_(col), value_(value), guard_(guard) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }
  double value() const noexcept { return value_; }
  double guard() const noexcept { return guard_; }

 private:
  std::size_t row_;
  std::size_t col_;
  double value_;
  double guard_;
};

// Training loss became non-finite at the given epoch.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, std::size_t epoch)
      : Error(what), epoch_(epoch) {}
  std::size_t epoch() const noexcept { return epoch_; }

 private:
  std::size_t epoch_;
};

// Matrix file syntax or semantic error, with 1-based line/column position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace dcx

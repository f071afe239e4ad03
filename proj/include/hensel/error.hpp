#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hensel {

enum class ErrorCode {
  NegativeValuation,
  PrecisionMismatch,
  FieldMismatch,
  NotAUnit,
  DivisionByZero,
  InvalidField,
  ArityMismatch,
  NotSquare,
  SingularModM,
  ZeroPolynomial,
  NotAHenselCode,
  DegreeTooSmall,
  ConstantNotInM,
  A1NotUnit,
  CriterionFailed,
  NotSeparable,
  ValidationFailed,
  PreconditionFailed,
  NotAtOrigin,
  Jac0NotUnit,
  NotMonic,
  SyntaxError,
  UnknownVariable,
  SchemaError,
};

/// Stable upper-case identifier used in JSON error documents.
std::string_view error_code_name(ErrorCode code);

/// Every error raised by the library. `code()` is machine-readable; `what()`
/// carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the expression parsers; carries a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, std::string expected, const std::string& detail)
      : Error(ErrorCode::SyntaxError, detail),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  int line_;
  int column_;
  std::string expected_;
};

}  // namespace hensel

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apnsurf {

enum class ErrorCode {
  ReducibleModulus,
  DegreeMismatch,
  UnsupportedDegree,
  DivisionByZero,
  FieldMismatch,
  NotASubfield,
  BudgetExceeded,
  InvariantViolation,
  SyntaxError,
  CoefficientNotInField,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

/// Single exception type for the library; `code()` tells callers what failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure; `position()` is a 0-based character offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& expected)
      : Error(ErrorCode::SyntaxError,
              "at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace apnsurf

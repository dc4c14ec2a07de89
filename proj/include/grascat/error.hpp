#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grascat {

// Failure categories shared by every module. Each operation documents which
// codes it can raise.
enum class ErrorCode {
  DimensionMismatch,
  NotAFactor,
  NotSemistandard,
  InvalidTableau,
  OutOfRange,
  NoDecomposition,
  FrozenVertex,
  BadParameters,
  IncomparableExchange,
  NoIntegerSolution,
  NonUniqueSolution,
  NotTwoIntervals,
  NotFiniteDimensional,
  AlgebraMismatch,
  DegenerateDenominator,
  NotGeneric,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace grascat

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gderive {

enum class ErrorCode {
  ParseError,
  DivisionByZero,
  DimensionMismatch,
  SingularMatrix,
  NotNilpotent,
  UnknownName,
  NotLieAlgebra,
  UnvalidatedAutomorphism,
  NotSigmaStable,
  NotInSubspace,
  AdNotInvertibleOnH,
  AbelianAlgebra,
  FiniteOrderInput,
  NoPeriod,
  DegreeGuardExceeded,
  UnknownVariable,
  ZeroParameterA,
  ZeroParameterB,
  IoError,
  Usage,
};

// Stable identifier used in CLI diagnostics, e.g. "E-SINGULAR-MATRIX".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gderive

#pragma once

#include <stdexcept>
#include <string>

namespace ratiovec {

enum class ErrorCode {
  NonIncreasingRoots,
  NonPositiveMultiplicity,
  LengthMismatch,
  TooFewRoots,
  SchemeArityMismatch,
  IndexOutOfRange,
  ArityMismatch,
  ArityTooSmall,
  EvalAtRoot,
  ConvergenceFailure,
  MultiplicityMismatch,
  HypothesisViolated,
  Sigma1OutOfRange,
  DomainError,
  NegativeDiscriminant,
  DegenerateDenominator,
  NotAMember,
  UnsupportedArity,
  ConfigInvalid,
  SpecInvalid,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ratiovec

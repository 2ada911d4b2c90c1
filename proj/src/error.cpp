#include "ratiovec/error.hpp"

namespace ratiovec {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonIncreasingRoots: return "NonIncreasingRoots";
    case ErrorCode::NonPositiveMultiplicity: return "NonPositiveMultiplicity";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooFewRoots: return "TooFewRoots";
    case ErrorCode::SchemeArityMismatch: return "SchemeArityMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::ArityTooSmall: return "ArityTooSmall";
    case ErrorCode::EvalAtRoot: return "EvalAtRoot";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::Sigma1OutOfRange: return "Sigma1OutOfRange";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::UnsupportedArity: return "UnsupportedArity";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::SpecInvalid: return "SpecInvalid";
  }
  return "UnknownError";
}

}  // namespace ratiovec

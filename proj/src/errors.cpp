#include "leastinterp/errors.hpp"

namespace leastinterp {

const char* errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::TruncationAmbiguous: return "TruncationAmbiguous";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
    case ErrorCode::CombinatorialBlowup: return "CombinatorialBlowup";
    case ErrorCode::NonRationalExpansion: return "NonRationalExpansion";
    case ErrorCode::NotAnImmersion: return "NotAnImmersion";
    case ErrorCode::StabilityCheckFailed: return "StabilityCheckFailed";
    case ErrorCode::NotDInvariant: return "NotDInvariant";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ConsistencyViolation: return "ConsistencyViolation";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string module, const std::string& message)
    : std::runtime_error(module + "." + errorCodeName(code) + ": " + message),
      code_(code),
      module_(std::move(module)),
      message_(message) {}

std::string Error::qualifiedCode() const { return module_ + "." + errorCodeName(code_); }

bool Error::isUsageError() const {
  return code_ == ErrorCode::SyntaxError || code_ == ErrorCode::ConfigError || code_ == ErrorCode::IoError ||
         code_ == ErrorCode::InvalidArgument;
}

}  // namespace leastinterp

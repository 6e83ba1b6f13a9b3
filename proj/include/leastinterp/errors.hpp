#pragma once

#include <stdexcept>
#include <string>

namespace leastinterp {

enum class ErrorCode {
  TruncationAmbiguous,
  TruncationInsufficient,
  SingularMatrix,
  DependentGenerators,
  CombinatorialBlowup,
  NonRationalExpansion,
  NotAnImmersion,
  StabilityCheckFailed,
  NotDInvariant,
  DimensionMismatch,
  ConsistencyViolation,
  DivisionByZero,
  InvalidArgument,
  SyntaxError,
  ConfigError,
  IoError,
};

const char* errorCodeName(ErrorCode code);

// Every mathematical failure is reported through this type; `module` is the
// library module that raised it, so reports can print "least.DependentGenerators".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& message);

  ErrorCode code() const { return code_; }
  const std::string& module() const { return module_; }
  std::string qualifiedCode() const;
  // Without the code prefix that what() carries.
  const std::string& message() const { return message_; }
  // Usage problems (bad config, bad syntax, I/O) map to exit code 1, the rest to 2.
  bool isUsageError() const;

 private:
  ErrorCode code_;
  std::string module_;
  std::string message_;
};

}  // namespace leastinterp

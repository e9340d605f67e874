#pragma once

#include <stdexcept>
#include <string>

namespace framecert {

// Failure categories surfaced by the toolkit. Each operation documents which
// codes it can raise; the CLI maps all of them to the input-error exit code.
enum class ErrorCode {
  DimensionMismatch,
  FieldMismatch,
  NonSquare,
  NotSymmetric,
  NotPositiveDefinite,
  SingularGram,
  Singular,
  NotAFrame,
  NotParseval,
  TooFewVectors,
  TooLarge,
  NoComplement,
  SubsetOutOfRange,
  ZeroSubspace,
  ZeroVector,
  PreconditionViolated,
  BadCoefficients,
  RangeError,
  ResampleExhausted,
  NotAViolation,
  BitLengthExceeded,
  BadPartition,
  NotAProjectionTarget,
  ParseError,
  UnknownExample,
  Internal,
};

/// Stable identifier string for an error code (used in CLI error payloads).
const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace framecert

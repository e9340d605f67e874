#include "framecert/errors.hpp"

namespace framecert {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::SingularGram: return "SingularGram";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotAFrame: return "NotAFrame";
    case ErrorCode::NotParseval: return "NotParseval";
    case ErrorCode::TooFewVectors: return "TooFewVectors";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoComplement: return "NoComplement";
    case ErrorCode::SubsetOutOfRange: return "SubsetOutOfRange";
    case ErrorCode::ZeroSubspace: return "ZeroSubspace";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BadCoefficients: return "BadCoefficients";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::ResampleExhausted: return "ResampleExhausted";
    case ErrorCode::NotAViolation: return "NotAViolation";
    case ErrorCode::BitLengthExceeded: return "BitLengthExceeded";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::NotAProjectionTarget: return "NotAProjectionTarget";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace framecert

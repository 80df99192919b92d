#include "concbound/types.hpp"

namespace concbound {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::BadSubsystemIndex: return "BadSubsystemIndex";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadSplit: return "BadSplit";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::WrongDims: return "WrongDims";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::NotDetectedAtUpperEnd: return "NotDetectedAtUpperEnd";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace concbound

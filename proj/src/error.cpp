#include "hitset/error.hpp"

namespace hitset {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::DuplicateX: return "DuplicateX";
    case ErrorCode::DegenerateDisk: return "DegenerateDisk";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::Infeasible1D: return "Infeasible1D";
    case ErrorCode::PrereqViolated: return "PrereqViolated";
    case ErrorCode::RadiusMismatch: return "RadiusMismatch";
    case ErrorCode::EmptyPointSet: return "EmptyPointSet";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::GenerationFailure: return "GenerationFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace hitset

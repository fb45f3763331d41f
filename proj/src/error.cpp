#include "compcodec/error.hpp"

namespace compcodec {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::InvalidMultiset: return "InvalidMultiset";
    case ErrorCode::InconsistentMultiset: return "InconsistentMultiset";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::SigmaOutOfRange: return "SigmaOutOfRange";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::NotACodeword: return "NotACodeword";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoValidPadding: return "NoValidPadding";
    case ErrorCode::Uncorrectable: return "Uncorrectable";
    case ErrorCode::AmbiguousDecode: return "AmbiguousDecode";
    case ErrorCode::InvalidError: return "InvalidError";
    case ErrorCode::NoAdmissibleError: return "NoAdmissibleError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace compcodec

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace compcodec {

enum class ErrorCode {
  MalformedInput,
  InvalidMultiset,
  InconsistentMultiset,
  DimensionMismatch,
  SymmetryViolation,
  SigmaOutOfRange,
  RankOutOfRange,
  InvalidSequence,
  CapacityExceeded,
  NotACodeword,
  TooLarge,
  NoValidPadding,
  Uncorrectable,
  AmbiguousDecode,
  InvalidError,
  NoAdmissibleError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a stable code; the CLI maps
/// codes onto exit statuses.
class CodecError : public std::runtime_error {
 public:
  CodecError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace compcodec

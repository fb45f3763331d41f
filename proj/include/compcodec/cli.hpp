#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace compcodec::cli {

/// Exit statuses of the composition-codec tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kDecodeFailure = 3,
  kInternal = 4,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace compcodec::cli

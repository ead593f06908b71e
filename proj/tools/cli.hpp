#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpf::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kParse = 3,
  kIo = 4,
  kError = 5,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpf::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homaff::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kInvalidAlgebra = 3,
  kNegativeVerdict = 4,
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace homaff::cli

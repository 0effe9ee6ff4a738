#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dgsep {

enum ExitCode : int {
  kDecisionCompleted = 0,
  kFormatError = 2,
  kValidationFailure = 3,
  kWindowInsufficient = 4,
};

/// Runs one command line (without the program name) and returns the exit code.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dgsep

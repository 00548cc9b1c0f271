#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace netoutdeg {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,            // usage, parse and budget errors
  kExitDomainViolation = 2,  // a ballot outside the rule's class
  kExitViolations = 3,       // the axiom search found violations
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netoutdeg

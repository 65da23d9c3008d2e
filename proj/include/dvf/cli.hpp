#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dvf {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitSuiteFailure = 1,
  kExitDomain = 2,
  kExitPrecision = 3,
  kExitParse = 4,
};

/// Runs one invocation; `args` excludes the program name. Reports and
/// structured errors go to `out`; suite timings go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dvf

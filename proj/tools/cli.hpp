#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ultra::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kOracleMismatch = 3,
};

/// Runs one invocation. `args` excludes the program name. Results go to `out`
/// (or to the -o file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace ultra::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cp1graft::cli {

// Exit codes of the command-line tool.
enum Exit : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kInvalidMath = 3,
  kForbiddenInput = 4,
};

// Runs one invocation. `args` excludes the program name. JSON goes to
// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cp1graft::cli

#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace billiard::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInputError = 2,
};

// args[0] is the program name. Output goes to `out` (or to --out), diagnostics
// to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace billiard::cli

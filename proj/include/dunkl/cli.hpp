#pragma once

#include <iosfwd>

namespace dunkl {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidInput = 2,
  kExitPrecondition = 3,
  kExitVerificationFailed = 4,
};

// Entry point of dunkl-cli with injectable streams, so tests can drive it
// in-process.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dunkl

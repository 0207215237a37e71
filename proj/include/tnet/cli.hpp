#pragma once

#include <ostream>

namespace tnet {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,        // bad arguments or configuration
  kExitNoConvergence = 3,
  kExitIo = 4,
};

// Entry point of the `tnet` tool, with the streams injectable for tests.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tnet

#ifndef EPIGRAPH_TOOLS_COMMANDS_H_
#define EPIGRAPH_TOOLS_COMMANDS_H_

#include <ostream>

#include "run_config.h"

namespace epigraph::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  // verify found a violation
  kExitUsage = 2,
  kExitPolicyFault = 3,
  kExitDegenerate = 4,
};

// Runs config.command. Main output goes to config.out (or `out` when that
// is empty); diagnostics and the echoed config go to `err`. Library
// exceptions are mapped onto exit codes here.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full command line: subcommand, flags, optional --config. Flags override
// fields read from the config file.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace epigraph::cli

#endif  // EPIGRAPH_TOOLS_COMMANDS_H_

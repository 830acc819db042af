#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace forbid {

/// Process exit codes of the command line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitInput = 2,
    kExitSolver = 3,
};

/// Entry point of the `forbid` tool. `args` excludes the program name.
/// Subcommands: remove, metrics, render, bench.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace forbid

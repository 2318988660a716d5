#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pipefit::cli {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitDomainError = 1,  // infeasible vertex, arity mismatch, nonpositive cut, I/O
  kExitUsageError = 2,   // bad flags, unknown names, unreadable catalog
};

/// Runs the tool with `args` (program name excluded). Results go to `out`
/// (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pipefit::cli

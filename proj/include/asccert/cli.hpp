#pragma once

#include <ostream>

namespace asccert {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCertificationFailure = 1,
  kExitUsage = 2,
};

/// Entry point of the `asccert` tool: verbs gen, verify, reduce, export-lp.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace asccert

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latkit/error.hpp"

namespace latkit {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNotALattice = 2,
  kExitNotSemidistributive = 3,
  kExitInvalidQuery = 4,
};

int exit_code_for(ErrorKind kind) noexcept;

/// Runs one CLI invocation; args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latkit

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circlezeros {

// Runs one CLI invocation; args excludes the program name.  Reports go to
// out (JSON when --json), diagnostics to err.  Exit status: 0 success,
// 2 input error, 3 precondition violation, 1 internal failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace circlezeros

#pragma once

#include <string>
#include <vector>

namespace grlab {

struct CommandResult {
    int exit_code = 0;
    std::string output;
};

// Dispatches one CLI invocation.  Exit codes: 0 completed (even when
// searches find witnesses), 1 usage/parse error, 2 internal invariant
// violation (theorem alarm).
CommandResult run_command(const std::vector<std::string>& args);

} // namespace grlab

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swctrl {

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out` (JSON or DOT), diagnostics to `err`. Exit codes: 0 success/pass,
/// 1 infeasible/fail, 2 input or usage error, 3 resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace swctrl

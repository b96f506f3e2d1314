#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homlie {

/// Dispatches one CLI invocation (argv without the program name).
/// Exit codes: 0 success, 1 domain failure (failed axiom or precondition),
/// 2 usage or parse error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace homlie

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eklr {

// Runs one CLI invocation; output and error text go to the given streams.
// Exit codes: 0 success / all checks passed, 1 verification failure,
// 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eklr

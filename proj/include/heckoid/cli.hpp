#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heckoid {

// Dispatches one CLI invocation. Exit codes: 0 pass/success, 1 certified
// failure or budget-exhausted verdict, 2 usage/domain error. In JSON mode,
// exactly one document is written to out.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heckoid

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace roots::cli {

// Runs the command-line front end on the given arguments (without the
// program name). Exit codes: 0 expected outcome, 1 unexpected or refuted
// verification, 2 malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace roots::cli

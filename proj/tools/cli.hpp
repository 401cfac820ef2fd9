#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arq {

// Dispatches one command line (without the program name).  Reports go to
// `out`, diagnostics to `err`.  Returns 0 for success or a true verdict,
// 1 for a negative verdict, 2 for usage, parse, or domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arq

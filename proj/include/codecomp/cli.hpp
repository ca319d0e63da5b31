#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Command dispatch for the codecomp tool. Kept out of main() so tests can
// drive subcommands in-process with captured streams.
//
// Exit status: 0 = success / feasible / true, 1 = infeasible / false /
// budget failure / not applicable, 2 = usage or parse error.

namespace codecomp::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace codecomp::cli

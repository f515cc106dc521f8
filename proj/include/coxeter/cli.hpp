#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxeter {

// Runs the command line given argv-style arguments (without the program
// name). Returns the process exit code: 0 success/pass, 1 verification
// failure, 2 usage/config error, 3 resource limit.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace coxeter

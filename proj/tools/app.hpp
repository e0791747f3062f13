#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kcheeger::cli {

// runs the command line given args (without the program name); payload goes
// to out, error objects to err; returns the process exit code
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kcheeger::cli

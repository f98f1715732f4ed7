#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlprop {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 on a domain error or failed assertion, 2 on misuse.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qlprop

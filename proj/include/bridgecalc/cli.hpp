#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bridgecalc {

// Exit status: 0 success or true, 1 invalid state or false, 2 malformed input or arguments.
// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bridgecalc

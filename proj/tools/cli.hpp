#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordalg {

// Exit codes: 0 the verdict holds, 1 it fails (witness printed), 2 usage or
// parse error.  args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordalg

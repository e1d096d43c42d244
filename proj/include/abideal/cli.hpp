#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abideal::cli {

// Exit codes: 0 success, 1 verification/assertion failure, 2 usage error or
// guard violation. args excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace abideal::cli

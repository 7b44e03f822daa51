#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deriv::cli {

// Exit codes: 0 ok, 1 parse error, 2 unsupported input class, 3 budget
// exceeded. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deriv::cli

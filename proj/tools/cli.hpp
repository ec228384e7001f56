#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace critwin::cli {

// args excludes the program name. Returns 0 on success, 1 when a
// verification finds a violation, 2 on a usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace critwin::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lightclock::cli {

/// Exit codes: 0 success, 1 domain or output error, 2 configuration error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lightclock::cli

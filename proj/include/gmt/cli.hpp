#pragma once

// Command-line entry point. Exit codes: 0 success, 1 numerical failure or a
// failed acceptance criterion (diagnostic JSON on stdout), 2 usage error.

#include <iosfwd>

namespace gmt {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gmt

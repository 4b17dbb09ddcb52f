#pragma once

#include <iosfwd>

namespace gderive {

// Exit codes: 0 success, 2 invalid input, 1 guard trips.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gderive

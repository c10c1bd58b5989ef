#pragma once

#include <iosfwd>

namespace oacd {

// Exit codes: 0 ok, 1 invariant failure, 2 bad input or degenerate generators.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace oacd

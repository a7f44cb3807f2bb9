#pragma once

#include <ostream>

namespace erq {

/// The erq command line. Writes the result document to `out` and
/// diagnostics to `err`; returns the exit code (0 ok, 2 bad input, 3 internal
/// invariant violation).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace erq

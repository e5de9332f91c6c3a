#pragma once

#include <ostream>

namespace psos {

/// Runs the padic-sos command line. JSON goes to `out`, diagnostics to `err`.
/// Exit code 0 ok, 2 inconclusive or non-termination, 1 error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace psos

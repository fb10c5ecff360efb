#ifndef BISPEC_TOOLS_CLI_HPP
#define BISPEC_TOOLS_CLI_HPP

#include <iosfwd>

namespace bispec {

/// Runs the command line. Exit codes: 0 verdict pass, 2 verdict fail or a
/// mathematically degenerate input, 1 usage or configuration error. Errors are
/// written to err as {"error": {...}} JSON.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bispec

#endif

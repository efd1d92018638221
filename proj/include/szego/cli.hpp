#pragma once
//
// Command-line front end. Subcommands: zeros, curve, measure, potential, verify, leja, experiment.
//

#include <iosfwd>

namespace szego {

/// Exit codes returned by run_cli.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Parses argv, runs the subcommand and writes its outputs. Results go to `out` (or to files
/// under --out / --out-dir), diagnostics and usage text to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace szego

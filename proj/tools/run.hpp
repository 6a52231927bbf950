// run.hpp — Executes a resolved RunConfig

#pragma once

#include <iosfwd>

#include "cli_config.hpp"

namespace mirrorcoh::cli {

/// Runs the subcommand and writes its output. Returns 0 iff every row was
/// computed and, for `table`, every row is within tolerance; 1 otherwise.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_config followed by run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mirrorcoh::cli

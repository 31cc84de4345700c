#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdrls::cli {

// Command-line front end behind the sdrls binary. `args` excludes the
// program name. Human-readable output goes to `out`, diagnostics to `err`;
// returns the process exit code. Kept as a function so tests can drive the
// full argument surface in-process.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace sdrls::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinchain {

// Entry point behind the `spinchain` binary. Subcommands: spectrum, evolve,
// fidelity, sweep, reproduce. Returns 0 on success, 2 on invalid arguments,
// 1 on runtime failure. Every run echoes the fully resolved configuration as
// `key = value` lines that parse back as a --config file.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinchain

#pragma once

#include <ostream>
#include <span>
#include <string>

namespace deltastar::cli {

enum ExitStatus : int {
    exit_ok = 0,
    exit_domain_error = 1,
    exit_usage_error = 2,
};

// Runs one command. args excludes the program name. Exactly one output
// envelope (or the --quiet scalar) goes to out on success; diagnostics go to
// err.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace deltastar::cli

#pragma once

#include <string>
#include <vector>

namespace dominion::cli {

namespace exit_code {
    constexpr int success = 0;
    constexpr int domain_error = 1;
    constexpr int usage_error = 2;
    constexpr int resource_cap = 3;
}

struct CommandOutcome {
    int exit_code = exit_code::success;
    std::string out;
    std::string err;
};

/// Runs one command line (without the program name) and captures its output.
auto run(const std::vector<std::string> & args) -> CommandOutcome;

} // namespace dominion::cli

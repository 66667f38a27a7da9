#include "cli.hpp"

#include <iostream>

auto main(int argc, char ** argv) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    auto outcome = dominion::cli::run(args);
    std::cout << outcome.out;
    std::cerr << outcome.err;
    return outcome.exit_code;
}

#include <iostream>
#include <string>
#include <vector>

#include "hyperlip_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hyperlip::cli::run(args, std::cout, std::cerr);
}

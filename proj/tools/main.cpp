#include <iostream>
#include <string>
#include <vector>

#include "ltibound/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ltibound::run_cli(args, std::cout, std::cerr);
}

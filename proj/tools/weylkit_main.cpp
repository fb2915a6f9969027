#include <iostream>
#include <string>
#include <vector>

#include "weylkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return weylkit::run_cli(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "eklr/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return eklr::run_cli(args, std::cout, std::cerr);
}

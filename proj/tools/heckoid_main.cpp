#include <iostream>
#include <vector>

#include "heckoid/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return heckoid::run_cli(args, std::cout, std::cerr);
}

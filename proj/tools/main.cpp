#include <iostream>
#include <string>
#include <vector>

#include "eltlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return eltlab::cli::run(args, std::cout, std::cerr);
}

#include "bettilab/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bettilab::run(args, std::cin, std::cout, std::cerr);
}

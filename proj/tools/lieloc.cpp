#include <iostream>
#include <string>
#include <vector>

#include "lieloc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lieloc::cli::run(args, std::cout, std::cerr);
}

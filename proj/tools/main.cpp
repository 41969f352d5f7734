#include <iostream>
#include <vector>

#include "orthoradial/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return orthoradial::cli_main(args, std::cout, std::cerr);
}

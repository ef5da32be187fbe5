#include <iostream>

#include "affectus/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return affectus::cli_main(args, std::cout, std::cerr);
}

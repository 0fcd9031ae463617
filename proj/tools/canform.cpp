#include <iostream>

#include "canform/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return canform::cli::main_entry(args, std::cout, std::cerr);
}

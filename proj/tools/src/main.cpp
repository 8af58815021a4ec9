#include <iostream>

#include "qgamble/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qgamble::cli::run(args, std::cout, std::cerr);
}

#include <iostream>

#include "qfrob/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qfrob::run_cli(args, std::cout, std::cerr);
}

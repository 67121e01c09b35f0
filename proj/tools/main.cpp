#include <iostream>
#include <string>
#include <vector>

#include "modo/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return modo::run_command(args, std::cout);
}

#include <iostream>
#include <string>
#include <vector>

#include "relengine/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return relengine::run_cli(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "tricent/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    std::vector<std::string> args(argv, argv + argc);
    return tricent::run_cli(args, std::cin, std::cout, std::cerr);
}

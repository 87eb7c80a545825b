#include <iostream>
#include <string>
#include <vector>

#include "cedual/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return cedual::cli::run(args, std::cout, std::cerr);
}

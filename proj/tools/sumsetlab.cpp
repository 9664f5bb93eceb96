#include "cli/cli.hpp"

#include <iostream>

int main(int argc, char ** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return sumsetlab::cli::run(args, std::cout, std::cerr, sumsetlab::cli::Environment::from_process());
}

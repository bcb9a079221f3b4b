#include "ascheme/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return ascheme::run_cli(argc, argv, std::cout, std::cerr);
}

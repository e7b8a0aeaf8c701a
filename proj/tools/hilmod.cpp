#include "hilmod_cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return hilmod::cli::run(argc, argv, std::cout, std::cerr);
}

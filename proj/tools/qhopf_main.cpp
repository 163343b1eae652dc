#include <iostream>

#include "qhopf/cli.hpp"

int main(int argc, char** argv)
{
    return qhopf::cli::run(argc, argv, std::cout, std::cerr);
}

#include <iostream>

#include "invder/cli.hpp"

int main(int argc, char** argv) {
    return invder::run_cli(argc, argv, std::cout, std::cerr);
}

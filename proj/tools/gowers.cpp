#include <iostream>

#include "gowers/cli.hpp"

int main(int argc, char** argv) {
    return gowers::cli::run(argc, argv, std::cout, std::cerr);
}

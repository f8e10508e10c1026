#include <iostream>

#include "chains/cli.hpp"

int main(int argc, char** argv) {
    return chains::cli::main(argc, argv, std::cout, std::cerr);
}

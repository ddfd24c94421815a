#include <iostream>

#include "goodlab/cli.hpp"

int main(int argc, char** argv) {
    return goodlab::cli::run(argc, argv, std::cout, std::cerr);
}

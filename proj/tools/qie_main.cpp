#include "qie/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return qie::cli::run(argc, argv, std::cout, std::cerr);
}

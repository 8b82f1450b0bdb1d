#include "firreg/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return firreg::cli::main(argc, argv, std::cout, std::cerr); }

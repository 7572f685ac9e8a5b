#include <iostream>

#include "symcc/cli.hpp"

int main(int argc, char** argv) { return symcc::cli::run(argc, argv, std::cout, std::cerr); }

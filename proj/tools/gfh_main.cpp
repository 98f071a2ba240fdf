#include <iostream>

#include "gfh/cli.hpp"

int main(int argc, char** argv) { return gfh::cli::main(argc, argv, std::cout, std::cerr); }

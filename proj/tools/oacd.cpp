#include <iostream>

#include "oacd/cli.hpp"

int main(int argc, char** argv) { return oacd::run_cli(argc, argv, std::cout, std::cerr, std::cin); }

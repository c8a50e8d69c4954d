#include <iostream>

#include "unitcycle/cli.hpp"

int main(int argc, char** argv) { return unitcycle::cli::main(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "bohr/cli/commands.hpp"

int main(int argc, char** argv) { return bohr::cli::run_cli(argc, argv, std::cout, std::cerr); }

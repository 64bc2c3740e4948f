#include <iostream>

#include "nonvanish/cli/commands.hpp"

int main(int argc, char** argv) { return nonvanish::cli::run_cli(argc, argv, std::cout, std::cerr); }

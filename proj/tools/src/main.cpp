#include <iostream>

#include "fplab/cli/commands.hpp"

int main(int argc, char** argv) { return fplab::cli::run_cli(argc, argv, std::cout, std::cerr); }

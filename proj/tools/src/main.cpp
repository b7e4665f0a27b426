#include <iostream>

#include "sepsym_cli/cli.hpp"

int main(int argc, char** argv) { return sepsym::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "nomamec_cli/cli.hpp"

int main(int argc, char** argv) { return nomamec::cli::run(argc, argv, std::cout, std::cerr); }

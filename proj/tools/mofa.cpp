#include <iostream>

#include "mofa/cli.hpp"

int main(int argc, char** argv) { return mofa::cli::main(argc, argv, std::cout, std::cerr); }

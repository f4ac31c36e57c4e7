#include <iostream>

#include "borsuk/cli.hpp"

int main(int argc, char** argv) { return borsuk::cli::main(argc, argv, std::cout, std::cerr); }

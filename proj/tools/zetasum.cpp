#include <iostream>

#include "zetasum/cli.hpp"

int main(int argc, char** argv) { return zetasum::cli::run(argc, argv, std::cout, std::cerr); }

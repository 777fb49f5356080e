#include "frey/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return frey::cli::run(argc, argv, std::cout, std::cerr); }

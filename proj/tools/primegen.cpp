#include <iostream>

#include "primegen/cli.hpp"

int main(int argc, char** argv) { return primegen::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "cubal/cli.hpp"

int main(int argc, char** argv) { return cubal::cli::main_entry(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "pprod/cli.hpp"

int main(int argc, char** argv) { return pprod::cli::run(argc, argv, std::cout, std::cerr); }

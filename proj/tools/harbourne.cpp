#include <iostream>

#include "harbourne/cli.hpp"

int main(int argc, char** argv) { return harbourne::cli::run(argc, argv, std::cout, std::cerr); }

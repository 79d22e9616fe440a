#include <iostream>

#include "overpart/cli.hpp"

int main(int argc, char** argv) { return overpart::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "orbitope/cli.hpp"

int main(int argc, char** argv) { return orbitope::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "nsjack/cli.hpp"

int main(int argc, char** argv) { return nsjack::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "dwkit/cli.hpp"

int main(int argc, char** argv) { return dwkit::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "fcair/cli.hpp"

int main(int argc, char** argv) { return fcair::cli::run(argc, argv, std::cout, std::cerr); }

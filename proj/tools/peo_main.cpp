#include <iostream>

#include "peo/cli.hpp"

int main(int argc, char** argv) { return peo::cli::run(argc, argv, std::cout, std::cerr); }

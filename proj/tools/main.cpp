#include <iostream>

#include "cstress/cli.hpp"

int main(int argc, char** argv) { return cstress::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "mye/cli.hpp"

int main(int argc, char** argv) { return mye::cli::run(argc, argv, std::cout, std::cerr); }

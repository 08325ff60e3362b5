#include <iostream>

#include "mzv/cli.hpp"

int main(int argc, char** argv) { return mzv::cli::run(argc, argv, std::cout, std::cerr); }

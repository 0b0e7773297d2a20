#include <iostream>

#include "isodiff/cli.hpp"

int main(int argc, char** argv) { return isodiff::cli::run(argc, argv, std::cout, std::cerr); }

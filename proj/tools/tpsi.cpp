#include <iostream>

#include "tpsi/cli.hpp"

int main(int argc, char** argv) { return tpsi::cli::main(argc, argv, std::cout, std::cerr); }

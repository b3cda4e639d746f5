#include <iostream>

#include "stablesup_cli/cli.hpp"

int main(int argc, char** argv) { return stablesup::cli::run(argc, argv, std::cout, std::cerr); }

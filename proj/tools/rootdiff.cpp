#include <iostream>

#include "rootdiff_cli.hpp"

int main(int argc, char** argv) { return rootdiff::cli::run(argc, argv, std::cout, std::cerr); }

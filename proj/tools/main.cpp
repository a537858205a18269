#include "cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return elastic::cli::run(argc, argv, std::cout, std::cerr); }

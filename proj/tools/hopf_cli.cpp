#include "cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return hopf::cli::run(argc, argv, std::cout, std::cerr); }

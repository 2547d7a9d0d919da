#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return a2l2::cli::run(argc, argv, std::cout, std::cerr); }

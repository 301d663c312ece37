#include <iostream>

#include "bent3_cli.hpp"

int main(int argc, char** argv) { return bent3::cli::run(argc, argv, std::cout, std::cerr); }

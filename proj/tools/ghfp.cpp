#include <iostream>

#include "ghfp/cli.hpp"

int main(int argc, char** argv) { return ghfp::run_cli(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "rde/cli.hpp"

int main(int argc, char** argv) { return rde::run_cli(argc, argv, std::cout, std::cerr); }

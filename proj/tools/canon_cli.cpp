#include <iostream>

#include "canon/cli.hpp"

int main(int argc, char **argv) { return canon::run_cli(argc, argv, std::cin, std::cout, std::cerr); }

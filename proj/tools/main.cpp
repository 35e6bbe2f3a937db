#include <iostream>

#include "normcheck/cli.hpp"

int main(int argc, char** argv) { return normcheck::run_cli(argc, argv, std::cout, std::cerr); }

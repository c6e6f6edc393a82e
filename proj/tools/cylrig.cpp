#include <iostream>

#include "cylrig/cli.hpp"

int main(int argc, char** argv) { return cylrig::run_cli(argc, argv, std::cout, std::cerr); }

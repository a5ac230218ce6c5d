#include "gmt/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return gmt::run_cli(argc, argv, std::cout, std::cerr); }

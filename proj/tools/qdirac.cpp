#include <iostream>

#include "qdirac/cli.hpp"

int main(int argc, char** argv) { return qdirac::run_cli(argc, argv, std::cout, std::cerr); }

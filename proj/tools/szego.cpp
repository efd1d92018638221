#include "szego/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return szego::run_cli(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "kuroda/cli.hpp"

int main(int argc, char** argv) { return kuroda::run_cli(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "curv/cli.hpp"

int main(int argc, char** argv) { return curv::run_cli(argc, argv, std::cout, std::cerr); }

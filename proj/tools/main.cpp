#include <iostream>

#include "ribbonforge/cli.hpp"

int main(int argc, char** argv) { return ribbonforge::run_cli(argc, argv, std::cout, std::cerr); }

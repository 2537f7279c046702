#include <iostream>

#include "butson/cli.hpp"

int main(int argc, char** argv) { return butson::run_cli(argc, argv, std::cin, std::cout, std::cerr); }

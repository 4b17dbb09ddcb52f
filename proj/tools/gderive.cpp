#include <iostream>

#include "gderive/cli.hpp"

int main(int argc, char** argv) { return gderive::run_cli(argc, argv, std::cout, std::cerr); }

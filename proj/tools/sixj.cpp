#include <iostream>

#include "sixj/cli.hpp"

int main(int argc, char** argv) { return sixj::cli_main(argc, argv, std::cout, std::cerr); }

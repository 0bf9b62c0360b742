#include <iostream>

#include "upk/cli.hpp"

int main(int argc, char** argv) { return upk::cli_main(argc, argv, std::cout, std::cerr); }

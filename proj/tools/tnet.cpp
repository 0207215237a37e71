#include <iostream>

#include "tnet/cli.hpp"

int main(int argc, char** argv) { return tnet::cli_main(argc, argv, std::cout, std::cerr); }

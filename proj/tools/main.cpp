#include <iostream>

#include "latkit/cli.hpp"

int main(int argc, char** argv) { return latkit::cli_main(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "dvf/cli.hpp"

int main(int argc, char** argv) { return dvf::run_cli({argv + 1, argv + argc}, std::cout, std::cerr); }

#include <iostream>

#include "lrb/cli.hpp"

int main(int argc, char** argv) { return lrb::run_command(argc, argv, std::cout, std::cerr); }

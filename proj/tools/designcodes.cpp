#include <iostream>

#include "designcodes/cli.hpp"

int main(int argc, char** argv) { return dcodes::run(argc, argv, std::cout, std::cerr); }

#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return xh::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "cigf/cli.hpp"

int main(int argc, char** argv) { return cigf::run(argc, argv, std::cout, std::cerr); }

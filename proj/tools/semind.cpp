#include <iostream>

#include "semind/cli.hpp"

int main(int argc, char** argv) { return semind::run(argc, argv, std::cout, std::cerr); }

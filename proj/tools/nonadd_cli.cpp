#include <iostream>

#include "nonadd/cli.hpp"

int main(int argc, char** argv) { return nonadd::cli::run(argc, argv, std::cout, std::cerr); }

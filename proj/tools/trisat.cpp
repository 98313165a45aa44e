#include <iostream>

#include "trisat/cli.hpp"

int main(int argc, char** argv) { return trisat::run_cli(argc, argv, std::cout, std::cerr); }

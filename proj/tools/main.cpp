#include <iostream>

#include "asccert/cli.hpp"

int main(int argc, char** argv) { return asccert::run_cli(argc, argv, std::cout, std::cerr); }

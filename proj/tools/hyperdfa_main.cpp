#include <iostream>

#include "hyperdfa/cli.hpp"

int main(int argc, char** argv) { return hyperdfa::cli_dispatch(argc, argv, std::cout, std::cerr); }

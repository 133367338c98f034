#include <iostream>

#include "equiareal/cli/commands.hpp"

int main(int argc, char** argv) { return equiareal::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "hlcode/cli/commands.hpp"

int main(int argc, char** argv) { return hlcode::cli::run(argc, argv, std::cout, std::cerr); }

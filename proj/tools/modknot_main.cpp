#include <iostream>

#include "modknot/cli.hpp"

int main(int argc, char** argv) { return modknot::cli::run(argc, argv, std::cout, std::cerr); }

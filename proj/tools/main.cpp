#include "tropnull/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tropnull::cli::run(argc, argv, std::cout, std::cerr); }

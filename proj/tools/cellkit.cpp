#include "cellkit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cellkit::cli::run(argc, argv, std::cout, std::cerr); }

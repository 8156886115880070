#include <iostream>

#include "cellkit/cli.hpp"

int main(int argc, char** argv) { return cellkit::cli::run(argc, argv, std::cout, std::cerr); }

#include "kmw_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return kmw::cli::run(argc, argv, std::cout, std::cerr); }

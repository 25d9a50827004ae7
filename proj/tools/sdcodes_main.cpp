#include <iostream>

#include "sdcodes/cli.hpp"

int main(int argc, char** argv) { return sdc::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "lcp/cli.hpp"

int main(int argc, char** argv) { return lcp::cli::run(argc, argv, std::cout, std::cerr); }

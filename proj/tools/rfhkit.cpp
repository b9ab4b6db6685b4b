#include <iostream>

#include "rfhkit/cli/app.hpp"

int main(int argc, char** argv) { return rfh::cli::run(argc, argv, std::cout, std::cerr); }

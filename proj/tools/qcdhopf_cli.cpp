#include <iostream>

#include "qcdhopf/cli.hpp"

int main(int argc, char** argv) { return qcdhopf::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "qcorr/cli.hpp"

int main(int argc, char** argv) { return qcorr::run_cli(argc, argv, std::cout, std::cerr); }

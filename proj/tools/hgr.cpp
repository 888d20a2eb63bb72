#include <iostream>

#include "hgr/cli.hpp"

int main(int argc, char** argv) { return hgr::run_cli(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "kyfan/cli.hpp"

int main(int argc, char** argv) { return kyfan::cli::main(argc, argv, std::cout, std::cerr); }

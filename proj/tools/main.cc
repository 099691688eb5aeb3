#include <iostream>

#include "gpc_cli/cli.h"

int main(int argc, char** argv) { return gpc::cli::run(argc, argv, std::cout, std::cerr); }

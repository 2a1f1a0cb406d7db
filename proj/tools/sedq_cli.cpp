#include <iostream>

#include "sedq/cli.h"

int main(int argc, char** argv) { return sedq::run_cli(argc, argv, std::cout, std::cerr); }

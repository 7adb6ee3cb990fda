#include "metagrowth/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return metagrowth::cli::runCli(argc, argv, std::cout, std::cerr); }

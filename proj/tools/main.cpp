#include <iostream>

#include "pacs/cli/commands.hpp"

int main(int argc, char** argv) { return pacs::cli::run(argc, argv, std::cout, std::cerr); }

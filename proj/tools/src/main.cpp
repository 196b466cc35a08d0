#include "staymap/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return staymap::cli::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}

#include <iostream>

#include "s2s2_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return s2s2::cli::run(args, std::cin, std::cout, std::cerr);
}

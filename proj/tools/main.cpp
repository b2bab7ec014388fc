#include <iostream>

#include "bellows/cli/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return bellows::cli::run(args, std::cout, std::cerr);
}

#include <iostream>

#include "ellvb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ellvb::cli::run(args, std::cin, std::cout, std::cerr);
}

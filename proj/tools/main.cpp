#include <iostream>

#include "spinalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spinalg::run_cli(args, std::cout, std::cerr);
}

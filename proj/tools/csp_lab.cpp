#include <iostream>

#include "csplab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return csplab::run_cli(args, std::cout, std::cerr);
}

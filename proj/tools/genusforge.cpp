#include <iostream>
#include <string>
#include <vector>

#include "genusforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return genusforge::run_cli(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "thzff/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return thzff::run_cli(args, std::cout, std::cerr);
}

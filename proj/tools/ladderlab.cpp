#include <iostream>
#include <string>
#include <vector>

#include "ladderlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ladderlab::run(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "hz/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hz::run(args, std::cout, std::cerr);
}

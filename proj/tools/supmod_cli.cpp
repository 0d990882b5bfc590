#include <iostream>
#include <string>
#include <vector>

#include "supmod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return supmod::run_cli(args, std::cout, std::cerr);
}

#include <iostream>
#include <vector>

#include "treespec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return treespec::run_cli(args, std::cin, std::cout, std::cerr);
}

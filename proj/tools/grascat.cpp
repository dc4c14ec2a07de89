#include <iostream>
#include <string>
#include <vector>

#include "grascat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return grascat::run_cli(args, std::cout, std::cerr);
}

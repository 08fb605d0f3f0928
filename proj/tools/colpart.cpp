#include <iostream>
#include <string>
#include <vector>

#include "colpart/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return colpart::run_cli(args, std::cout, std::cerr);
}

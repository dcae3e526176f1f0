#include <iostream>
#include <string>
#include <vector>

#include "phopf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return phopf::run_cli(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "sysent/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sysent::run_cli(args, std::cout, std::cerr);
}

#include <iostream>

#include "qweyl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return qweyl::run_cli(args, std::cout, std::cerr);
}

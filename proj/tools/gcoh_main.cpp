#include <iostream>

#include "gcoh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gcoh::run_cli(args, std::cout, std::cerr);
}

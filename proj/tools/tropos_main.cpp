#include <iostream>

#include "tropos/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tropos::run_cli(args, std::cout, std::cerr);
}

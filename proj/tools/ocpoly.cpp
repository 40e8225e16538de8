#include <iostream>

#include "ocpoly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ocpoly::run_command(args, std::cout, std::cerr);
}

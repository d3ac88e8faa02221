#include <iostream>

#include "ratwitt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ratwitt::run_cli(args, std::cout, std::cerr);
}

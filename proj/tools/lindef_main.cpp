#include <iostream>
#include <vector>

#include "lindef/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lindef::cli_main(args, std::cout, std::cerr);
}

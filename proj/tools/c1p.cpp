#include <iostream>
#include <string>
#include <vector>

#include "c1p/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return c1p::cli::run(args, std::cout, std::cerr);
}

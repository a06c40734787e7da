#include <iostream>
#include <string>
#include <vector>

#include "idemquat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return idemquat::cli::run(args, std::cout, std::cerr);
}

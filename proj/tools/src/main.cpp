#include <iostream>

#include "cyclat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cyclat::cli::run(args, std::cout, std::cerr);
}

#include <iostream>

#include "kunneth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kunneth::cli::run(args, std::cout, std::cerr);
}

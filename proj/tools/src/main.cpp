#include <iostream>

#include "blackwell/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return blackwell::cli::run(args, std::cout, std::cerr);
}

#include <iostream>

#include "pebbling/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pebbling::cli::run(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "evdkit_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return evdkit::cli::run(args, std::cout, std::cerr);
}

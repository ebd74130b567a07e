#include <iostream>
#include <string>
#include <vector>

#include "kring_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kring::cli::run(args, std::cout, std::cerr);
}

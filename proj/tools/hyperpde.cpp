#include <iostream>
#include <string>
#include <vector>

#include "hyperpde/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hyperpde::cli::run(args, std::cout, std::cerr);
}

#include <iostream>
#include <vector>

#include "groupext/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return groupext::cli_run(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "tcrit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tcrit::run_cli(args, std::cout, std::cerr);
}

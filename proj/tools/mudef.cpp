#include <iostream>
#include <string>
#include <vector>

#include "mudef/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return mudef::cli::run(args, std::cout, std::cerr);
}

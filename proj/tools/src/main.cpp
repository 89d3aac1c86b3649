#include <iostream>
#include <string>
#include <vector>

#include "kspan_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kspan::cli::run(args, std::cout, std::cerr);
}

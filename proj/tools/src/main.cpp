#include <iostream>
#include <string>
#include <vector>

#include "gecliff/tools/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gecliff::tools::run(args, std::cout, std::cerr);
}

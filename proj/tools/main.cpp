#include <iostream>
#include <string>
#include <vector>

#include "oag/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return oag::cli::main(args, std::cout, std::cerr);
}

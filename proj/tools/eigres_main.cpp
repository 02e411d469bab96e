#include <iostream>
#include <string>
#include <vector>

#include "eigres/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eigres::cli::run(args, std::cout, std::cerr);
}

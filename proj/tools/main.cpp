#include <iostream>
#include <string>
#include <vector>

#include "agpoly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return agpoly::cli::run(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "graphonlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return graphonlab::cli::run(args, std::cout, std::cerr);
}

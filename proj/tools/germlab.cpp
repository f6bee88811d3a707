#include <iostream>
#include <string>
#include <vector>

#include "germlab/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return germlab::cli::run(args, std::cout, std::cerr);
}

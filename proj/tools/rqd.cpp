#include <iostream>
#include <string>
#include <vector>

#include "rqd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rqd::cli::run(args, std::cout, std::cerr);
}

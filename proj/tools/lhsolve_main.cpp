#include <iostream>
#include <string>
#include <vector>

#include "lhsolve/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lhsolve::cli::dispatch(args, std::cout, std::cerr);
}

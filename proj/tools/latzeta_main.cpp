#include <iostream>
#include <string>
#include <vector>

#include "latzeta/cli_io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return latzeta::run_cli(std::move(args), std::cout, std::cerr);
}

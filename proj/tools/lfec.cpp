#include <iostream>
#include <string>
#include <vector>

#include "lfec/genio.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lfec::run_cli(args, std::cout, std::cerr);
}

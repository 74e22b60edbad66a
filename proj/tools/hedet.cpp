#include <iostream>
#include <string>
#include <vector>

#include "hedetniemi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hedetniemi::dispatch(args, std::cout, std::cerr);
}

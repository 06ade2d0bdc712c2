#include <iostream>
#include <string>
#include <vector>

#include "margchoice/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return margchoice::run(args, std::cout, std::cerr);
}

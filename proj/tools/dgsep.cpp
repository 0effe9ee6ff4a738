#include <iostream>

#include "dgsep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dgsep::runCli(args, std::cout, std::cerr);
}

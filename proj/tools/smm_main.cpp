#include <iostream>
#include <string>
#include <vector>

#include "smm/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return smm::runCli(args, std::cout, std::cerr);
}

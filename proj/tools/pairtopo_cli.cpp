#include <iostream>

#include "pairtopo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pairtopo::cli::runCli(args, std::cin, std::cout, std::cerr);
}

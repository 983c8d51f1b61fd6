#include <iostream>
#include <string>
#include <vector>

#include "deckpoly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return deckpoly::cli::run(args, std::cout, std::cerr);
}

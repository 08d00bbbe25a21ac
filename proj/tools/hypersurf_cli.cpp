#include <iostream>

#include "hypersurf/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return hypersurf::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}

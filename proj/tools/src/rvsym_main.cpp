#include <iostream>

#include "rvsym/tools/cli.hpp"

int main(int argc, char** argv) {
  return rvsym::cli::main(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

#include <iostream>

#include "satrank/cli.hpp"

int main(int argc, char** argv) {
  return satrank::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

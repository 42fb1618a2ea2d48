#include <iostream>

#include "gft_cli.hpp"

int main(int argc, char** argv) {
  return gft::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

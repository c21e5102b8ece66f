#include <iostream>
#include <string>
#include <vector>

#include "bandinv/cli.hpp"

int main(int argc, char** argv) {
  return bandinv::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

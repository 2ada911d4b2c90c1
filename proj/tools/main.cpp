#include <iostream>

#include "ratiovec/cli.hpp"

int main(int argc, char** argv) {
  return ratiovec::cli::run(argc, argv, std::cout, std::cerr);
}

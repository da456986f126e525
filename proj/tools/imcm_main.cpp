#include <iostream>

#include "imcm/cli.hpp"

int main(int argc, char** argv) {
  return imcm::cli::main_with_args(argc, argv, std::cout, std::cerr);
}

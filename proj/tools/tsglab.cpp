#include <iostream>

#include "tsglab/cli.hpp"

int main(int argc, char** argv) {
  try {
    return tsglab::run_cli(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "tsglab: " << e.what() << "\n";
    return 1;
  }
}

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return invqm::cli::run(argc, argv, std::cout, std::cerr);
}

#include <iostream>

#include "monotrick/cli.hpp"

int main(int argc, char** argv) {
  return monotrick::cli::run(argc, argv, std::cout, std::cerr);
}

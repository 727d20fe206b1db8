#include <iostream>

#include "cliff/cli.hpp"

int main(int argc, char **argv) {
  return cliff::cli::run_command(argc, argv, std::cout, std::cerr);
}

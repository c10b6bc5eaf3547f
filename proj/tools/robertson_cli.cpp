#include <iostream>

#include "robertson/cli.hpp"

int main(int argc, char** argv) {
  return robertson::cli::main_entry(argc, argv, std::cout, std::cerr);
}

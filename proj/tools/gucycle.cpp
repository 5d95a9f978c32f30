#include <iostream>

#include "gucycle/cli.hpp"

int main(int argc, char** argv) {
  return gucycle::run_cli(argc, argv, std::cout, std::cerr);
}

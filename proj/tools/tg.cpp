#include <iostream>

#include "tgraph/cli.hpp"

int main(int argc, char** argv) {
  return tgraph::run_cli(argc, argv, std::cout, std::cerr);
}

#include <iostream>

#include "qginv/cli.hpp"

int main(int argc, char** argv) {
  return qginv::cli::run(argc, argv, std::cout, std::cerr);
}

#include <iostream>

#include "fareycorr/cli/execute.hpp"

int main(int argc, char** argv) {
  return fareycorr::cli::run_main(argc, argv, std::cout, std::cerr);
}

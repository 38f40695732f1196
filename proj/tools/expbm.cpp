#include <iostream>

#include "expbm/cli.hpp"
#include "expbm/parallel.hpp"

int main(int argc, char** argv) {
  expbm::apply_worker_threads();
  return expbm::run_cli(argc, argv, std::cout, std::cerr);
}

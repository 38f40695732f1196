#include "expbm/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace expbm {

int worker_threads() {
  if (const char* v = std::getenv(kThreadsEnvVar)) {
    try {
      std::size_t pos = 0;
      const int n = std::stoi(v, &pos);
      if (n > 0 && pos == std::string(v).size()) return n;
    } catch (const std::exception&) {
    }
  }
  return omp_get_num_procs();
}

void set_worker_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

void apply_worker_threads() { set_worker_threads(worker_threads()); }

}  // namespace expbm

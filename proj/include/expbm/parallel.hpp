#pragma once

namespace expbm {

inline constexpr const char* kThreadsEnvVar = "EXPBM_THREADS";

// Worker count from EXPBM_THREADS if set to a positive integer, else the OpenMP default.
int worker_threads();

// Applies worker_threads() to the OpenMP runtime.
void apply_worker_threads();
void set_worker_threads(int n);

}  // namespace expbm

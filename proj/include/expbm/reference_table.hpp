#pragma once

#include <span>

namespace expbm {

struct ReferenceEntry {
  double lambda;
  double f;
};

inline constexpr double kReferenceT = 1.0;

// Published 10-digit values of f(lambda, 1), lambda = 0.01 .. 2.00 step 0.01.
std::span<const ReferenceEntry> reference_density_table();

}  // namespace expbm

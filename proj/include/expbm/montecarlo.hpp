#pragma once

#include <cstdint>
#include <vector>

#include "expbm/density.hpp"

namespace expbm {

struct McConfig {
  long paths = 100000;
  int steps_per_unit_time = 64;
  std::uint64_t seed = 42;
  double t = 1.0;
};

struct McEstimate {
  long samples = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double raw_moment1 = 0.0;
  double raw_moment2 = 0.0;
  std::uint64_t seed = 0;
};

int mc_total_steps(const McConfig& cfg);

// One trapezoid-integrated sample of int_0^t e^{2B(s)} ds per path; path i uses
// its own SplitMix64 stream keyed on (seed, i), so results do not depend on threads.
std::vector<double> mc_sample(const McConfig& cfg);
std::vector<double> mc_sample_serial(const McConfig& cfg);

McEstimate mc_summarize(const std::vector<double>& samples, std::uint64_t seed);
McEstimate mc_functional(const McConfig& cfg);

// Exact expectation of the trapezoid estimator on the simulation grid.
double mc_trapezoid_expectation(const McConfig& cfg);

struct CdfPoint {
  double lambda = 0.0;
  double cdf = 0.0;
  double std_error = 0.0;
};

std::vector<CdfPoint> mc_cdf_check(const McConfig& cfg, const std::vector<double>& lambda_points);
std::vector<CdfPoint> empirical_cdf(const std::vector<double>& samples, const std::vector<double>& lambda_points);

}  // namespace expbm

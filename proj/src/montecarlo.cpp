#include "expbm/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "expbm/errors.hpp"

namespace expbm {

namespace {

// SplitMix64 as a UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

std::uint64_t path_key(std::uint64_t seed, std::uint64_t path) {
  SplitMix64 mix(seed ^ (path * 0xD1B54A32D192ED03ULL));
  mix();
  return mix();
}

void check(const McConfig& cfg) {
  if (cfg.paths < 1) throw DomainError("mc: paths must be >= 1");
  if (cfg.steps_per_unit_time < 16) throw DomainError("mc: steps_per_unit_time must be >= 16");
  if (!(cfg.t > 0) || !std::isfinite(cfg.t)) throw DomainError("mc: t must be positive");
  if (mc_total_steps(cfg) < 2) throw DomainError("mc: need at least 2 steps");
}

double one_path(const McConfig& cfg, int steps, double dt, long path) {
  SplitMix64 rng(path_key(cfg.seed, static_cast<std::uint64_t>(path)));
  std::normal_distribution<double> normal(0.0, std::sqrt(dt));
  double b = 0.0;
  double sum = 0.5;  // e^{2B(0)} / 2
  for (int i = 1; i < steps; ++i) {
    b += normal(rng);
    sum += std::exp(2.0 * b);
  }
  b += normal(rng);
  sum += 0.5 * std::exp(2.0 * b);
  return sum * dt;
}

}  // namespace

int mc_total_steps(const McConfig& cfg) {
  return static_cast<int>(std::ceil(cfg.steps_per_unit_time * cfg.t - 1e-9));
}

std::vector<double> mc_sample_serial(const McConfig& cfg) {
  check(cfg);
  const int steps = mc_total_steps(cfg);
  const double dt = cfg.t / steps;
  std::vector<double> out(static_cast<std::size_t>(cfg.paths));
  for (long i = 0; i < cfg.paths; ++i) out[i] = one_path(cfg, steps, dt, i);
  return out;
}

std::vector<double> mc_sample(const McConfig& cfg) {
  check(cfg);
  const int steps = mc_total_steps(cfg);
  const double dt = cfg.t / steps;
  std::vector<double> out(static_cast<std::size_t>(cfg.paths));
#pragma omp parallel for schedule(static)
  for (long i = 0; i < cfg.paths; ++i) out[i] = one_path(cfg, steps, dt, i);
  return out;
}

McEstimate mc_summarize(const std::vector<double>& samples, std::uint64_t seed) {
  McEstimate e;
  e.samples = static_cast<long>(samples.size());
  e.seed = seed;
  if (samples.empty()) return e;
  // Two-pass for the variance; serial so the result is independent of thread count.
  long double s1 = 0, s2 = 0;
  for (double x : samples) {
    s1 += x;
    s2 += static_cast<long double>(x) * x;
  }
  const long double n = samples.size();
  const long double mean = s1 / n;
  long double ss = 0;
  for (double x : samples) ss += (x - mean) * (x - mean);
  e.mean = static_cast<double>(mean);
  e.raw_moment1 = e.mean;
  e.raw_moment2 = static_cast<double>(s2 / n);
  e.std_error = samples.size() > 1 ? static_cast<double>(std::sqrt(ss / (n - 1) / n)) : 0.0;
  return e;
}

McEstimate mc_functional(const McConfig& cfg) { return mc_summarize(mc_sample(cfg), cfg.seed); }

double mc_trapezoid_expectation(const McConfig& cfg) {
  check(cfg);
  const int steps = mc_total_steps(cfg);
  const double dt = cfg.t / steps;
  double sum = 0.5 * (1.0 + std::exp(2.0 * cfg.t));
  for (int i = 1; i < steps; ++i) sum += std::exp(2.0 * i * dt);
  return sum * dt;
}

std::vector<CdfPoint> empirical_cdf(const std::vector<double>& samples, const std::vector<double>& lambda_points) {
  std::vector<double> sorted(samples);
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  std::vector<CdfPoint> out;
  out.reserve(lambda_points.size());
  for (double lam : lambda_points) {
    const double count = static_cast<double>(std::lower_bound(sorted.begin(), sorted.end(), lam) - sorted.begin());
    const double p = n > 0 ? count / n : 0.0;
    out.push_back({lam, p, n > 0 ? std::sqrt(p * (1.0 - p) / n) : 0.0});
  }
  return out;
}

std::vector<CdfPoint> mc_cdf_check(const McConfig& cfg, const std::vector<double>& lambda_points) {
  return empirical_cdf(mc_sample(cfg), lambda_points);
}

}  // namespace expbm

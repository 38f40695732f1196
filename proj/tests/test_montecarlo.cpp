#include <doctest.h>

#include <cmath>
#include <cstring>

#include "expbm/errors.hpp"
#include "expbm/montecarlo.hpp"
#include "expbm/parallel.hpp"
#include "expbm/quadrature.hpp"

using namespace expbm;

TEST_CASE("configuration checks") {
  McConfig cfg;
  cfg.paths = 0;
  CHECK_THROWS_AS(mc_functional(cfg), DomainError);
  cfg = {};
  cfg.steps_per_unit_time = 8;
  CHECK_THROWS_AS(mc_functional(cfg), DomainError);
  cfg = {};
  cfg.t = 0.01;  // one step
  CHECK_THROWS_AS(mc_functional(cfg), DomainError);
  cfg = {};
  cfg.t = 1.0;
  CHECK(mc_total_steps(cfg) == 64);
}

TEST_CASE("mean at t = 1") {
  McConfig cfg;
  cfg.paths = 100000;
  cfg.seed = 42;
  const auto e = mc_functional(cfg);
  const double exact = (std::exp(2.0) - 1.0) / 2.0;
  CHECK(exact == doctest::Approx(3.1945280494653251136));
  CHECK(e.samples == 100000);
  CHECK(e.seed == 42);
  CHECK(e.std_error > 0);
  CHECK(std::fabs(e.mean - exact) <= 3 * e.std_error);
}

TEST_CASE("second moment at t = 1") {
  McConfig cfg;
  cfg.paths = 1000000;
  cfg.seed = 7;
  const auto s = mc_sample(cfg);
  const auto e = mc_summarize(s, cfg.seed);
  // Standard error of the raw second moment from the sample fourth moment.
  long double m4 = 0;
  for (double x : s) m4 += static_cast<long double>(x) * x * x * x;
  m4 /= s.size();
  const double se2 = std::sqrt(static_cast<double>(m4) - e.raw_moment2 * e.raw_moment2) / std::sqrt(double(s.size()));
  const double exact = ((std::exp(8.0) - 1) / 8 - (std::exp(2.0) - 1) / 2) / 3;
  CHECK(exact == doctest::Approx(123.10007344358356974));
  CHECK(std::fabs(e.raw_moment2 - exact) <= 3 * se2);
}

TEST_CASE("small t: the functional is close to t") {
  McConfig cfg;
  cfg.t = 0.05;
  cfg.steps_per_unit_time = 2000;
  cfg.paths = 20000;
  const auto e = mc_functional(cfg);
  CHECK(std::fabs(e.mean - 0.05) < 0.01);
  CHECK(std::fabs(e.mean - std::expm1(0.1) / 2) <= 3 * e.std_error);
}

TEST_CASE("discretization: trapezoid expectation approaches the exact mean") {
  McConfig cfg;
  const double exact = std::expm1(2.0) / 2;
  double prev = INFINITY;
  for (int steps : {16, 32, 64, 128, 256}) {
    cfg.steps_per_unit_time = steps;
    const double bias = std::fabs(mc_trapezoid_expectation(cfg) - exact);
    CHECK(bias < prev);
    prev = bias;
  }
  // Each resolution is consistent with its own grid expectation.
  cfg.paths = 100000;
  for (int steps : {16, 64}) {
    cfg.steps_per_unit_time = steps;
    const auto e = mc_functional(cfg);
    CHECK(std::fabs(e.mean - mc_trapezoid_expectation(cfg)) <= 3 * e.std_error);
  }
}

TEST_CASE("determinism and thread-count independence") {
  McConfig cfg;
  cfg.paths = 5000;
  cfg.seed = 99;
  const auto serial = mc_sample_serial(cfg);
  set_worker_threads(1);
  const auto p1 = mc_sample(cfg);
  set_worker_threads(3);
  const auto p3 = mc_sample(cfg);
  apply_worker_threads();
  REQUIRE(serial.size() == p3.size());
  CHECK(std::memcmp(serial.data(), p1.data(), serial.size() * sizeof(double)) == 0);
  CHECK(std::memcmp(serial.data(), p3.data(), serial.size() * sizeof(double)) == 0);
  cfg.seed = 100;
  CHECK(mc_sample_serial(cfg) != serial);
}

TEST_CASE("empirical CDF") {
  const std::vector<double> s{0.5, 1.5, 2.5, 3.5};
  const auto c = empirical_cdf(s, {0.0, 2.0, 10.0});
  CHECK(c[0].cdf == 0.0);
  CHECK(c[1].cdf == 0.5);
  CHECK(c[1].std_error == doctest::Approx(0.25));
  CHECK(c[2].cdf == 1.0);
}

TEST_CASE("series CDF against Monte Carlo at (1, 1)") {
  McConfig cfg;
  cfg.paths = 100000;
  cfg.steps_per_unit_time = 128;
  const auto c = mc_cdf_check(cfg, {1.0}).front();
  const double series = series_cdf(1.0, 1.0);
  CHECK(std::fabs(c.cdf - series) <= 3 * c.std_error);
  CHECK(series_cdf(0.01, 1.0) == 0.0);
}

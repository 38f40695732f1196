#include <doctest.h>

#include <cmath>
#include <numbers>

#include "expbm/density.hpp"
#include "expbm/errors.hpp"
#include "expbm/oracles.hpp"

using namespace expbm;

TEST_CASE("complex log Gamma") {
  for (double x : {0.3, 1.0, 2.5, 7.0, 40.0}) CHECK(log_gamma(cplx(x, 0)).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  // Gamma(1/2 + i y) has |.|^2 = pi / cosh(pi y).
  for (double y : {0.5, 3.0, 20.0}) {
    const double expect = 0.5 * std::log(std::numbers::pi / std::cosh(std::numbers::pi * y));
    CHECK(log_gamma(cplx(0.5, y)).real() == doctest::Approx(expect).epsilon(1e-12));
  }
  // Recurrence Gamma(z+1) = z Gamma(z), checked modulo the branch via exp().
  const cplx z(1.7, -4.2);
  const cplx lhs = std::exp(log_gamma(z + 1.0) - log_gamma(z));
  CHECK(std::abs(lhs - z) <= 1e-12 * std::abs(z));
  CHECK_THROWS_AS(log_gamma(cplx(-2.0, 0.0)), DomainError);
}

TEST_CASE("Kummer series") {
  CHECK(std::abs(kummer_1f1(cplx(0.7, 0.2), cplx(2.0, 1.0), 0.0) - 1.0) == 0.0);
  // 1F1(a; a; z) = e^z
  CHECK(std::abs(kummer_1f1(cplx(1.3, 2.0), cplx(1.3, 2.0), 5.0) - std::exp(5.0)) <= 1e-13 * std::exp(5.0));
  // 1F1(1; 2; z) = (e^z - 1) / z
  CHECK(std::abs(kummer_1f1(1.0, 2.0, 3.0) - std::expm1(3.0) / 3.0) <= 1e-14 * 7);
  // Terms eventually decrease monotonically.
  const cplx a(0.8, 0.4), c(2.6, 0.8);
  const double z = 10.0;
  cplx term = 1.0;
  double prev = 1.0;
  for (int n = 0; n < 200; ++n) {
    term *= (a + double(n)) / (c + double(n)) * (z / (n + 1));
    if (n > 12) CHECK(std::abs(term) < prev);
    prev = std::abs(term);
  }
}

TEST_CASE("closed-form transform") {
  CHECK(w_closed_form(1, 1).real() == doctest::Approx(0.22247559989587622252).epsilon(1e-12));
  CHECK(w_closed_form(1, 2).real() == doctest::Approx(0.090204010431049864594).epsilon(1e-12));
  CHECK(w_closed_form(0.5, 1).real() == doctest::Approx(0.52262595520203908354).epsilon(1e-12));
  CHECK(w_closed_form(0.25, 3).real() == doctest::Approx(0.41609062282663867728).epsilon(1e-12));
  const cplx v = w_closed_form(2, cplx(1, 2));
  CHECK(v.real() == doctest::Approx(-0.018554090136915113416).epsilon(1e-12));
  CHECK(v.imag() == doctest::Approx(-0.033876778161711412325).epsilon(1e-12));
  CHECK(std::abs(w_closed_form(2, cplx(1, -2)) - std::conj(v)) <= 1e-15);
  CHECK_THROWS_AS(w_closed_form(1, cplx(-1, 0)), DomainError);
  CHECK_THROWS_AS(w_closed_form(0, 1.0), DomainError);

  // Large lambda: 1F1 -> 1.
  const double lam = 1e6;
  const cplx q(1.5, 0.0);
  const cplx s = std::sqrt(2.0 * q);
  const cplx lim = 1.0 / (2 * lam) * std::exp(-0.5 * s * std::log(2 * lam) + log_gamma(0.5 * s) - log_gamma(s + 1.0));
  CHECK(std::abs(w_closed_form(lam, q) / lim - 1.0) <= 1e-5);
}

TEST_CASE("fixed Talbot inversion") {
  // e^{-t} from 1/(q+1)
  CHECK(std::fabs(talbot_invert([](cplx q) { return 1.0 / (q + 1.0); }, 1.0) - std::exp(-1.0)) <= 1e-9);
  CHECK(std::fabs(talbot_density(1.0, 1.0) - 0.3505685606) <= 1e-6);
  CHECK(std::fabs(talbot_density(0.5, 1.0) - 0.5861685681) <= 1e-6);
  TalbotConfig twice;
  twice.node_count = 64;
  CHECK(std::fabs(talbot_density(1.0, 1.0, twice) - talbot_density(1.0, 1.0)) < 1e-7);
  CHECK_THROWS_AS(talbot_density(0.05, 1.0), DomainError);
  CHECK_THROWS_AS(talbot_density(1.0, 6.0), DomainError);
  TalbotConfig odd;
  odd.node_count = 17;
  CHECK_THROWS_AS(talbot_density(1.0, 1.0, odd), DomainError);
  CHECK(std::fabs(talbot_kernel_invert(0, 1, 1) - 0.1366060074) <= 1e-6);
}

TEST_CASE("series against Talbot at the triangle points") {
  for (auto [lam, t] : {std::pair{0.5, 1.0}, {1.0, 1.0}, {2.0, 1.0}, {1.0, 2.0}}) {
    CAPTURE(lam);
    CAPTURE(t);
    CHECK(std::fabs(density({lam, t}).value - talbot_density(lam, t)) <= 2e-6);
  }
}

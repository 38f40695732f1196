#include <cmath>
#include <numbers>

#include "expbm/errors.hpp"
#include "expbm/oracles.hpp"

namespace expbm {

namespace {

// B_{2k} / (2k (2k-1)), k = 1..8
constexpr double kStirling[] = {1.0 / 12,          -1.0 / 360,        1.0 / 1260,         -1.0 / 1680,
                                1.0 / 1188,        -691.0 / 360360,   1.0 / 156,          -3617.0 / 122400};

}  // namespace

cplx log_gamma(cplx z) {
  if (z.real() <= 0 && z.imag() == 0 && z.real() == std::floor(z.real()))
    throw DomainError("log_gamma: pole at nonpositive integer");
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    const double pi = std::numbers::pi;
    return std::log(pi / std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  cplx shift_prod = 1.0;
  cplx log_shift = 0.0;
  while (std::abs(z) < 15.0) {
    shift_prod *= z;
    z += 1.0;
    if (std::abs(shift_prod) > 1e250) {
      log_shift += std::log(shift_prod);
      shift_prod = 1.0;
    }
  }
  log_shift += std::log(shift_prod);
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx p = inv;
  for (double c : kStirling) {
    series += c * p;
    p *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series - log_shift;
}

cplx kummer_1f1(cplx a, cplx c, double z) {
  if (!(z >= 0) || !std::isfinite(z)) throw DomainError("kummer_1f1: z must be finite and >= 0");
  const int max_terms = static_cast<int>(10.0 * z) + 200;
  cplx term = 1.0;
  cplx sum = 1.0;
  for (int n = 0; n < max_terms; ++n) {
    term *= (a + double(n)) / (c + double(n)) * (z / (n + 1));
    sum += term;
    if (n + 1 > z && std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
  }
  throw ConvergenceError("kummer_1f1: series did not converge within 10 z + 200 terms");
}

namespace {

cplx w_unchecked(double lambda, cplx q) {
  const cplx s = std::sqrt(2.0 * q);
  const double x = 1.0 / (2.0 * lambda);
  const cplx log_part = -x - std::log(2.0 * lambda) * (1.0 + 0.5 * s) + log_gamma(0.5 * s) - log_gamma(s + 1.0);
  return std::exp(log_part) * kummer_1f1(0.5 * s, s + 1.0, x);
}

}  // namespace

cplx w_closed_form(double lambda, cplx q) {
  if (!(lambda > 0) || !std::isfinite(lambda)) throw DomainError("w_closed_form: lambda must be positive");
  if (!(q.real() > 0)) throw DomainError("w_closed_form: Re q must be positive");
  return w_unchecked(lambda, q);
}

cplx w_n_transform(double lambda, cplx q, int n) {
  if (n < 0) throw DomainError("w_n_transform: n must be >= 0");
  if (!(lambda > 0)) throw DomainError("w_n_transform: lambda must be positive");
  const cplx s = std::sqrt(2.0 * q);
  return std::exp(-0.5 * s * std::log(2.0 * lambda) + log_gamma(0.5 * s + double(n)) - log_gamma(s + double(n) + 1.0));
}

namespace detail {
cplx w_contour(double lambda, cplx q) { return w_unchecked(lambda, q); }
}  // namespace detail

}  // namespace expbm

#include "expbm/phi_kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "expbm/errors.hpp"
#include "expbm/special_functions.hpp"

namespace expbm {

namespace {

void check_tau(long double tau) {
  if (!(tau > 0) || !std::isfinite(tau)) throw DomainError("kernel: tau must be positive and finite");
}

void check_order(int m) {
  if (m < 0) throw DomainError("kernel: order must be >= 0");
  if (m > kMaxPhiOrder)
    throw TruncationError("kernel order " + std::to_string(m) + " exceeds cap " + std::to_string(kMaxPhiOrder),
                          0.0, INFINITY, 0, m);
}

}  // namespace

std::vector<long double> hermite_kernel_sequence(int M, long double alpha, long double tau) {
  check_tau(tau);
  if (M < 0) throw DomainError("hermite_kernel_sequence: M must be >= 0");
  std::vector<long double> g(static_cast<std::size_t>(M) + 1);
  const long double inv2tau = 0.5L / tau;
  g[0] = std::exp(-alpha * alpha * 0.5L * inv2tau) / std::sqrt(std::numbers::pi_v<long double> * tau);
  if (M >= 1) g[1] = alpha * inv2tau * g[0];
  for (int m = 1; m < M; ++m) g[m + 1] = (alpha * g[m] - m * g[m - 1]) * inv2tau;
  return g;
}

double h_kernel(int m, double alpha, double tau) {
  check_tau(tau);
  if (m < 0) throw DomainError("h_kernel: m must be >= 0");
  return static_cast<double>(hermite_kernel_sequence(m, alpha, tau)[m]);
}

long double phi0(long double alpha, int beta, long double tau) {
  check_tau(tau);
  if (beta < 1) throw DomainError("phi0: beta must be >= 1");
  const long double st = std::sqrt(tau);
  const long double b = beta;
  const long double x = alpha / (2.0L * st) + b * st;
  const long double gauss = std::exp(-alpha * alpha / (4.0L * tau));
  const long double lead = 1.0L / std::sqrt(std::numbers::pi_v<long double> * tau);
  if (x >= 0) return gauss * (lead - b * erfcx(x));
  // x < 0 means alpha < -2 beta tau, so the exponent beta (alpha + beta tau) is negative.
  return gauss * lead - b * std::exp(alpha * b + b * b * tau) * erfc(x);
}

double phi0(double alpha, int beta, double tau) {
  return static_cast<double>(phi0(static_cast<long double>(alpha), beta, static_cast<long double>(tau)));
}

std::vector<long double> phi_sequence(int M, long double alpha, int beta, long double tau,
                                      const std::vector<long double>& h) {
  check_order(M);
  if (h.size() <= static_cast<std::size_t>(M)) throw DomainError("phi_sequence: Hermite kernel sequence too short");
  std::vector<long double> phi(static_cast<std::size_t>(M) + 1);
  phi[0] = phi0(alpha, beta, tau);
  for (int m = 1; m <= M; ++m) phi[m] = h[m] - beta * phi[m - 1];
  return phi;
}

double phi_m(int m, double alpha, int beta, double tau) {
  check_order(m);
  const auto h = hermite_kernel_sequence(m, alpha, tau);
  return static_cast<double>(phi_sequence(m, alpha, beta, tau, h)[m]);
}

}  // namespace expbm

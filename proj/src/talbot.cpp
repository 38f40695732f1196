#include <cmath>
#include <numbers>

#include "expbm/errors.hpp"
#include "expbm/oracles.hpp"

namespace expbm {

namespace detail {
cplx w_contour(double lambda, cplx q);
}

double talbot_invert(const std::function<cplx(cplx)>& F, double t, const TalbotConfig& cfg) {
  const int M = cfg.node_count;
  if (M < 16 || M % 2 != 0) throw DomainError("talbot: node_count must be even and >= 16");
  if (!(t > 0) || !std::isfinite(t)) throw DomainError("talbot: t must be positive");
  const double r = 2.0 * M / (5.0 * t);
  const double pi = std::numbers::pi;
  double acc = 0.5 * std::exp(r * t) * F(cplx(r, 0.0)).real();
  for (int k = 1; k < M; ++k) {
    const double theta = k * pi / M;
    const double cot = std::cos(theta) / std::sin(theta);
    const cplx s(r * theta * cot, r * theta);
    const double sigma = theta + (theta * cot - 1.0) * cot;
    const cplx v = std::exp(t * s) * F(s) * cplx(1.0, sigma);
    if (!std::isfinite(v.real())) throw ConvergenceError("talbot: non-finite transform value on contour");
    acc += v.real();
  }
  return r / M * acc;
}

namespace {

void check_envelope(double lambda, double t) {
  if (!(lambda >= 0.1) || !std::isfinite(lambda) || !(t >= 0.25 && t <= 5.0))
    throw DomainError("talbot oracle envelope is lambda >= 0.1, 0.25 <= t <= 5");
}

}  // namespace

double talbot_density(double lambda, double t, const TalbotConfig& cfg) {
  check_envelope(lambda, t);
  return talbot_invert([lambda](cplx q) { return detail::w_contour(lambda, q); }, t, cfg);
}

double talbot_kernel_invert(double alpha, int beta, double tau, const TalbotConfig& cfg) {
  if (beta < 1) throw DomainError("talbot_kernel_invert: beta must be >= 1");
  if (!std::isfinite(alpha) || !(tau >= 0.25 && tau <= 5.0))
    throw DomainError("talbot_kernel_invert envelope is finite alpha, 0.25 <= tau <= 5");
  return talbot_invert(
      [alpha, beta](cplx z) {
        const cplx rz = std::sqrt(z);
        return std::exp(-alpha * rz) / (rz + double(beta));
      },
      tau, cfg);
}

double talbot_fn(int n, double lambda, double t, const TalbotConfig& cfg) {
  check_envelope(lambda, t);
  const double inv = talbot_invert([lambda, n](cplx q) { return w_n_transform(lambda, q, n); }, t, cfg);
  return inv * std::sqrt(2.0 * lambda) * std::exp(-0.5 * t);
}

}  // namespace expbm

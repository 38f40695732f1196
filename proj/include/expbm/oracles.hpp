#pragma once

#include <complex>
#include <functional>

namespace expbm {

using cplx = std::complex<double>;

// Stirling series after shifting |z| >= 15; any branch of the log (only exp() is used downstream).
cplx log_gamma(cplx z);

// 1F1(a; c; z) for complex a, c and real z >= 0; throws ConvergenceError past 10 z + 200 terms.
cplx kummer_1f1(cplx a, cplx c, double z);

// Closed-form Laplace transform in t of the density at lambda. Requires Re q > 0.
cplx w_closed_form(double lambda, cplx q);

// (2 lambda)^{-s/2} Gamma(s/2 + n) / Gamma(s + n + 1), s = sqrt(2q); its inverse is e^{t/2} f_n / sqrt(2 lambda).
cplx w_n_transform(double lambda, cplx q, int n);

struct TalbotConfig {
  int node_count = 32;
  double precision_target = 1e-6;
};

// Fixed-Talbot inversion of F at time t. F must be analytic off the negative real axis.
double talbot_invert(const std::function<cplx(cplx)>& F, double t, const TalbotConfig& cfg = {});

// Validated envelope: lambda >= 0.1, 0.25 <= t <= 5; outside it these throw DomainError.
double talbot_density(double lambda, double t, const TalbotConfig& cfg = {});

// Inverse transform of e^{-alpha sqrt z} / (sqrt z + beta) at time tau (0.25 <= tau <= 5).
double talbot_kernel_invert(double alpha, int beta, double tau, const TalbotConfig& cfg = {});

// f_n(lambda, t) from the inverse of w_n_transform.
double talbot_fn(int n, double lambda, double t, const TalbotConfig& cfg = {});

}  // namespace expbm

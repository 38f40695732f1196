#pragma once

#include <functional>

#include "expbm/density.hpp"

namespace expbm {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

// Adaptive Gauss-Kronrod (15-point) on [a, b].
QuadResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-10,
                     unsigned max_depth = 15);

// int_{lambda_a}^{lambda_b} f(lambda, t) d lambda with the series density.
QuadResult density_mass(double t, double lambda_a, double lambda_b, const ToleranceSpec& tol = {});

// Series CDF P{A_t < lambda}, integrating from kMinSupportedLambda; the mass below it is neglected.
double series_cdf(double lambda, double t, const ToleranceSpec& tol = {});

// int_{t0}^{t1} f(lambda, t) e^{-q t} dt, a truncated Laplace transform in t.
QuadResult density_laplace(double lambda, double q, double t0, double t1, const ToleranceSpec& tol = {});

}  // namespace expbm

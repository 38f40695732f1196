#include "expbm/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace expbm {

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                     unsigned max_depth) {
  QuadResult r;
  r.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, rel_tol, &r.error);
  return r;
}

QuadResult density_mass(double t, double lambda_a, double lambda_b, const ToleranceSpec& tol) {
  return integrate([&](double lam) { return density({lam, t}, tol).value; }, lambda_a, lambda_b);
}

double series_cdf(double lambda, double t, const ToleranceSpec& tol) {
  if (lambda <= kMinSupportedLambda) return 0.0;
  return density_mass(t, kMinSupportedLambda, lambda, tol).value;
}

QuadResult density_laplace(double lambda, double q, double t0, double t1, const ToleranceSpec& tol) {
  return integrate([&](double t) { return density({lambda, t}, tol).value * std::exp(-q * t); }, t0, t1);
}

}  // namespace expbm

#include "expbm/special_functions.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>

#include "expbm/detail/borwein.hpp"
#include "expbm/errors.hpp"

namespace expbm {

namespace {

constexpr int kZetaBatch = 160;

const std::vector<long double>& zeta_table() {
  static const std::vector<long double> table =
      detail::borwein_zeta_batch<long double>(kZetaBatch, std::numeric_limits<long double>::digits10 + 2);
  return table;
}

constexpr long double kSqrtPiL = 1.772453850905516027298167483341145183L;
constexpr long double kInvSqrtPiL = 0.564189583547756286948079451560772586L;

// e^{-x^2} with x^2 split into a hi part exactly representable and the rest,
// so the exponent's rounding error does not grow with x^2.
long double exp_neg_sq(long double x) {
  const long double hi = std::trunc(x * 16.0L) / 16.0L;
  const long double lo = x - hi;
  return std::exp(-hi * hi) * std::exp(-lo * (x + hi));
}

// erf by Maclaurin series; only used for |x| < 0.5.
long double erf_small(long double x) {
  const long double x2 = x * x;
  long double term = x;
  long double sum = x;
  for (int n = 1; n < 60; ++n) {
    term *= -x2 / n;
    const long double c = term / (2 * n + 1);
    sum += c;
    if (std::fabs(c) < std::fabs(sum) * 1e-21L) break;
  }
  return 2.0L * kInvSqrtPiL * sum;
}

// erfcx(x) = (1/sqrt(pi)) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), modified Lentz.
long double erfcx_cf(long double x) {
  constexpr long double tiny = 1e-300L;
  long double f = x;
  long double C = f;
  long double D = 0.0L;
  for (int n = 1; n < 5000; ++n) {
    const long double a = 0.5L * n;
    D = x + a * D;
    if (D == 0.0L) D = tiny;
    C = x + a / C;
    if (C == 0.0L) C = tiny;
    D = 1.0L / D;
    const long double delta = C * D;
    f *= delta;
    if (std::fabs(delta - 1.0L) < 1e-20L) break;
  }
  return kInvSqrtPiL / f;
}

// Below this the Maclaurin series; above it the continued fraction (about 1000 terms at 0.5, 40 at 10).
constexpr long double kSmall = 0.5L;

}  // namespace

double zeta_int(int n) {
  if (n < 2) throw DomainError("zeta_int: n must be >= 2");
  if (n <= kZetaBatch) return static_cast<double>(zeta_table()[n]);
  // 2^{-n} < 1e-48 here; the first two terms of the Dirichlet series suffice.
  return 1.0 + std::ldexp(1.0, -n);
}

ZetaCache make_zeta_cache(int K) {
  if (K < 2) throw DomainError("make_zeta_cache: K must be >= 2");
  ZetaCache c;
  c.max_order = K;
  c.values.assign(static_cast<std::size_t>(K) + 1, 0.0);
  for (int n = 2; n <= K; ++n) c.values[n] = zeta_int(n);
  return c;
}

long double hermite(int m, long double x) {
  if (m < 0) throw DomainError("hermite: m must be >= 0");
  long double h0 = 1.0L;
  if (m == 0) return h0;
  long double h1 = 2.0L * x;
  for (int k = 1; k < m; ++k) {
    const long double h2 = 2.0L * x * h1 - 2.0L * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double hermite(int m, double x) { return static_cast<double>(hermite(m, static_cast<long double>(x))); }

long double erfc(long double x) {
  if (std::isnan(x)) return x;
  if (x < 0) return 2.0L - erfc(-x);
  if (x < kSmall) return 1.0L - erf_small(x);
  if (x > 110.0L) return 0.0L;
  return exp_neg_sq(x) * erfcx_cf(x);
}

long double erfcx(long double x) {
  if (std::isnan(x)) return x;
  if (x < 0) {
    const long double e = std::exp(x * x);
    return 2.0L * e - erfcx(-x);
  }
  if (x < kSmall) return std::exp(x * x) * (1.0L - erf_small(x));
  if (x > 1e9L) return kInvSqrtPiL / x;
  return erfcx_cf(x);
}

double erfc(double x) { return static_cast<double>(erfc(static_cast<long double>(x))); }
double erfcx(double x) { return static_cast<double>(erfcx(static_cast<long double>(x))); }

long double lgamma_half_l(int twice_arg) {
  if (twice_arg <= 0) throw DomainError("lgamma_half: argument is a pole of Gamma");
  // Product form keeps it exact to rounding; split into chunks so the product cannot overflow.
  long double log_sum = 0.0L;
  long double prod = 1.0L;
  long double z;
  if (twice_arg % 2 == 0) {
    z = 1.0L;
  } else {
    z = 0.5L;
    log_sum = std::log(kSqrtPiL);
  }
  const long double target = 0.5L * twice_arg;
  for (; z < target; z += 1.0L) {
    prod *= z;
    if (prod > 1e300L) {
      log_sum += std::log(prod);
      prod = 1.0L;
    }
  }
  return log_sum + std::log(prod);
}

double lgamma_half(int twice_arg) { return static_cast<double>(lgamma_half_l(twice_arg)); }

}  // namespace expbm

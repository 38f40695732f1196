#pragma once

#include <memory>
#include <vector>

namespace expbm {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// zeta(n) for integer n >= 2, memoized.
double zeta_int(int n);

struct ZetaCache {
  std::vector<double> values;  // values[n] = zeta(n); entries 0 and 1 unused
  int max_order = 1;

  double operator()(int n) const { return values.at(n); }
};

// zeta(2)..zeta(K) in one batch.
ZetaCache make_zeta_cache(int K);

// Taylor coefficients of 1/Gamma(1+z): sum_m d_m z^m.
struct DmTable {
  std::vector<long double> coeffs;
  int max_index = 0;

  long double operator[](int m) const { return coeffs[static_cast<std::size_t>(m)]; }
  // |d_m| <= majorant(m) for every m in the table, non-increasing in m.
  long double majorant(int m) const { return suffix_max[static_cast<std::size_t>(m)]; }

  std::vector<long double> suffix_max;
};

// d_0..d_M from the zeta recursion. The recursion cancels badly, so it runs in
// multiprecision (MPFR) and rounds to long double at the end.
DmTable dm_coeffs(int M);

// Process-wide table up to at least M. Immutable once published.
std::shared_ptr<const DmTable> shared_dm_table(int M);

// Heuristic majorant K * n^{-n/2}, K calibrated against |d_n|, 2 <= n <= 80.
long double dm_decay_bound(int n);
long double dm_decay_constant();

double hermite(int m, double x);
long double hermite(int m, long double x);

double erfc(double x);
double erfcx(double x);
long double erfc(long double x);
long double erfcx(long double x);

// log Gamma(twice_arg / 2); exact recurrence from Gamma(1/2) and Gamma(1).
double lgamma_half(int twice_arg);
long double lgamma_half_l(int twice_arg);

}  // namespace expbm

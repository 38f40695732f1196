#include "expbm/series_coefficients.hpp"

#include <cassert>
#include <cmath>
#include <mutex>
#include <numbers>

#include "expbm/errors.hpp"
#include "expbm/special_functions.hpp"

namespace expbm {

AkRow ak_row(int n) {
  if (n <= 0) throw DomainError("ak_row: n must be >= 1");
  AkRow row;
  row.n = n;
  row.kmax = ak_kmax(n);
  row.coeffs.resize(static_cast<std::size_t>(row.kmax) + 1);
  row.coeffs[0] = std::exp(lgamma_half_l(2 * n + 1) - lgamma_half_l(2 * n + 4));
  const long double ln2 = std::numbers::ln2_v<long double>;
  for (int k = 1; k <= row.kmax; ++k) {
    assert(n - k >= 0 && n - 2 * k + 2 >= 1);
    // The residue at w = -k also picks up (2w+1)/w = (2k-1)/k.
    const long double log_mag = -2.0L * k * ln2 - lgamma_half_l(2 * k) + lgamma_half_l(2 * (n - k) + 1) -
                                lgamma_half_l(2 * (n - 2 * k + 2)) +
                                std::log(static_cast<long double>(2 * k - 1) / k);
    const long double mag = std::exp(log_mag);
    row.coeffs[k] = (k % 2 == 1) ? mag : -mag;
  }
  return row;
}

double r_n_eval(int n, double w) {
  if (n <= 0) throw DomainError("r_n_eval: n must be >= 1");
  const int kmax = ak_kmax(n);
  if (w == std::floor(w) && w <= 0 && w >= -kmax) throw DomainError("r_n_eval: w is a pole");
  const long double x = w;
  long double r = std::sqrt(std::numbers::pi_v<long double>) * std::ldexp(1.0L, -(n + 1));
  r /= x + 0.5L * n + 0.5L;
  for (int j = 1; j <= n; ++j) r *= (x + j - 0.5L) / (x + 0.5L * j);
  r *= (2.0L * x + 1.0L) / x;
  return static_cast<double>(r);
}

std::shared_ptr<const AkTable> shared_ak_table(int n_max) {
  static std::mutex mu;
  static std::shared_ptr<const AkTable> cached;
  std::lock_guard<std::mutex> lock(mu);
  if (cached && cached->n_max >= n_max) return cached;
  auto next = std::make_shared<AkTable>();
  const int start = cached ? cached->n_max + 1 : 1;
  if (cached) next->rows = cached->rows;
  next->rows.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = start; n <= n_max; ++n) next->rows[n] = ak_row(n);
  next->n_max = n_max;
  cached = next;
  return cached;
}

}  // namespace expbm

#include <algorithm>
#include <cmath>
#include <mutex>

#include <boost/multiprecision/mpfr.hpp>

#include "expbm/detail/borwein.hpp"
#include "expbm/errors.hpp"
#include "expbm/special_functions.hpp"

namespace expbm {

namespace {

namespace bmp = boost::multiprecision;

// |d_M| ~ M^{-M} e^{0.9 M}-ish while the partial sums in the recursion stay O(1),
// so the working precision has to cover the full dynamic range plus a margin.
unsigned working_digits(int M) {
  if (M < 2) return 50;
  const double need = M * std::log10(static_cast<double>(M)) - 0.9 * M + 40.0;
  return static_cast<unsigned>(std::max(50.0, std::ceil(need)));
}

// mpfr_float in this Boost carries one global default precision.
std::mutex& mp_mutex() {
  static std::mutex m;
  return m;
}

std::vector<long double> run_recursion(int M) {
  std::lock_guard<std::mutex> lock(mp_mutex());
  const unsigned digits = working_digits(M);
  const unsigned saved = bmp::mpfr_float::default_precision();
  bmp::mpfr_float::default_precision(digits);

  std::vector<bmp::mpfr_float> s(static_cast<std::size_t>(M) + 2);
  if (M >= 1) {
    auto z = detail::borwein_zeta_batch<bmp::mpfr_float>(M + 1, static_cast<int>(digits));
    bmp::mpfr_float gamma;
    mpfr_const_euler(gamma.backend().data(), MPFR_RNDN);
    s[1] = gamma;
    for (int n = 2; n <= M; ++n) s[n] = z[n];
  }

  std::vector<bmp::mpfr_float> d(static_cast<std::size_t>(M) + 1);
  d[0] = 1;
  for (int n = 0; n < M; ++n) {
    bmp::mpfr_float acc = 0;
    for (int k = 0; k <= n; ++k) {
      if (k & 1)
        acc -= s[k + 1] * d[n - k];
      else
        acc += s[k + 1] * d[n - k];
    }
    d[n + 1] = acc / (n + 1);
  }

  std::vector<long double> out(static_cast<std::size_t>(M) + 1);
  for (int m = 0; m <= M; ++m) out[m] = d[m].convert_to<long double>();
  bmp::mpfr_float::default_precision(saved);
  return out;
}

DmTable make_table(std::vector<long double> coeffs) {
  DmTable t;
  t.max_index = static_cast<int>(coeffs.size()) - 1;
  t.coeffs = std::move(coeffs);
  t.suffix_max.resize(t.coeffs.size());
  long double run = 0.0L;
  for (int m = t.max_index; m >= 0; --m) {
    run = std::max(run, std::fabs(t.coeffs[m]));
    t.suffix_max[m] = run;
  }
  return t;
}

constexpr int kCalibrationMax = 80;
// Covers the kernel-order cap plus room for the tail lookahead past it.
constexpr int kDefaultShared = 432;

}  // namespace

DmTable dm_coeffs(int M) {
  if (M < 0) throw DomainError("dm_coeffs: M must be >= 0");
  return make_table(run_recursion(M));
}

std::shared_ptr<const DmTable> shared_dm_table(int M) {
  static std::mutex mu;
  static std::shared_ptr<const DmTable> cached;
  std::lock_guard<std::mutex> lock(mu);
  if (!cached || cached->max_index < M) {
    cached = std::make_shared<const DmTable>(dm_coeffs(std::max(M, kDefaultShared)));
  }
  return cached;
}

long double dm_decay_constant() {
  static const long double K = [] {
    auto t = shared_dm_table(kCalibrationMax);
    long double k = 0.0L;
    for (int n = 2; n <= kCalibrationMax; ++n) {
      k = std::max(k, std::fabs((*t)[n]) * std::pow(static_cast<long double>(n), 0.5L * n));
    }
    return k;
  }();
  return K;
}

long double dm_decay_bound(int n) {
  if (n < 2) throw DomainError("dm_decay_bound: n must be >= 2");
  return dm_decay_constant() * std::pow(static_cast<long double>(n), -0.5L * n);
}

}  // namespace expbm

#pragma once

#include <cmath>
#include <vector>

namespace expbm::detail {

// Borwein's alternating-series acceleration for zeta(s), s = 2..max_s, sharing
// the d_k weights and the running powers (k+1)^{-s} across all s.
// Error per value is about 3 / (3 + sqrt 8)^N.
template <class Real>
std::vector<Real> borwein_zeta_batch(int max_s, int digits) {
  const int N = static_cast<int>(std::ceil(digits * std::log(10.0) / std::log(3.0 + std::sqrt(8.0)))) + 2;
  std::vector<Real> d(static_cast<std::size_t>(N) + 1);
  Real term = 1;
  Real acc = 0;
  for (int i = 0; i <= N; ++i) {
    acc += term;
    d[i] = acc;
    term *= Real(4) * Real(N + i) * Real(N - i) / (Real(2 * i + 1) * Real(2 * i + 2));
  }
  std::vector<Real> inv(N), pw(N);
  for (int k = 0; k < N; ++k) {
    inv[k] = Real(1) / Real(k + 1);
    pw[k] = inv[k];
  }
  std::vector<Real> out(static_cast<std::size_t>(max_s) + 1, Real(0));
  Real two_pow = Real(1) / Real(2);  // 2^{-(s-1)} at s = 2
  for (int s = 2; s <= max_s; ++s) {
    Real sum = 0;
    for (int k = 0; k < N; ++k) {
      pw[k] *= inv[k];
      Real c = (d[k] - d[N]) * pw[k];
      if (k & 1)
        sum -= c;
      else
        sum += c;
    }
    out[s] = -sum / (d[N] * (Real(1) - two_pow));
    two_pow /= 2;
  }
  return out;
}

}  // namespace expbm::detail

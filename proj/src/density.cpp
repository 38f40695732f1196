#include "expbm/density.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <string>

#include "expbm/detail/neumaier.hpp"
#include "expbm/errors.hpp"
#include "expbm/phi_kernels.hpp"
#include "expbm/series_coefficients.hpp"
#include "expbm/special_functions.hpp"

namespace expbm {

namespace {

using ld = long double;

constexpr ld kEps = std::numeric_limits<ld>::epsilon();
constexpr ld kInf = std::numeric_limits<ld>::infinity();
constexpr ld kSqrtPi = 1.772453850905516027298167483341145183L;
constexpr ld kCramer = 1.0865L;  // sup |H_m(x)| e^{-x^2/2} / sqrt(2^m m!)
constexpr int kLookahead = 6;

struct Geometry {
  ld lambda, t, x, alpha, tau, log_prefactor;
};

void check_point(const EvalPoint& pt) {
  if (!(pt.lambda > 0) || !std::isfinite(pt.lambda)) throw DomainError("lambda must be positive and finite");
  if (!(pt.t > 0) || !std::isfinite(pt.t)) throw DomainError("t must be positive and finite");
}

Geometry geometry(const EvalPoint& pt) {
  Geometry g;
  g.lambda = pt.lambda;
  g.t = pt.t;
  g.x = 1.0L / (2.0L * g.lambda);
  g.alpha = std::log(8.0L * g.lambda) - 2.0L * g.t;
  g.tau = 2.0L * g.t;
  g.log_prefactor = -1.5L * std::log(2.0L * g.lambda) - g.x + 0.5L * g.t;
  return g;
}

ld log_h_bound(int m, ld alpha, ld tau) {
  const ld u = alpha / (2.0L * std::sqrt(tau));
  return std::log(kCramer) - 0.5L * std::log(std::numbers::pi_v<ld> * tau) - 0.5L * u * u +
         0.5L * lgamma_half_l(2 * m + 2) - 0.5L * m * std::log(2.0L * tau);
}

ld d_bound(const DmTable& d, int m) {
  if (m <= d.max_index) return d.majorant(m);
  return dm_decay_bound(m);
}

// Remainder past the last computed index Mc: a few majorant terms, then a
// geometric extrapolation. For k >= 1 the kernel bound follows |Phi_m| <= |h_m| + k|Phi_{m-1}|.
ld beyond_cap_tail(const DmTable& d, int Mc, ld alpha, ld tau, int k, ld last_abs) {
  ld B = last_abs;
  ld sum = 0, prev = 0, cur = 0;
  for (int j = 1; j <= kLookahead; ++j) {
    const int m = Mc + j;
    const ld hb = std::exp(log_h_bound(m, alpha, tau));
    B = (k == 0) ? hb : hb + k * B;
    prev = cur;
    cur = d_bound(d, m) * B;
    sum += cur;
  }
  if (!(prev > 0)) return sum;
  const ld r = cur / prev;
  if (!(r < 1)) return kInf;
  return sum + cur * r / (1 - r);
}

struct InnerSeries {
  std::vector<ld> partial;      // sum_{m<=M} d_m v_m
  std::vector<ld> abs_partial;  // sum_{m<=M} |d_m v_m|
  std::vector<ld> tail;         // estimate of the remainder after index M
};

InnerSeries build_inner(const DmTable& d, const std::vector<ld>& v, int Mc, ld beyond) {
  InnerSeries s;
  s.partial.resize(static_cast<std::size_t>(Mc) + 1);
  s.abs_partial.resize(s.partial.size());
  s.tail.resize(s.partial.size());
  detail::Neumaier<ld> acc;
  ld abs_acc = 0;
  for (int m = 0; m <= Mc; ++m) {
    const ld term = d[m] * v[m];
    acc.add(term);
    abs_acc += std::fabs(term);
    s.partial[m] = acc.value();
    s.abs_partial[m] = abs_acc;
  }
  ld suffix = beyond;
  for (int m = Mc; m >= 0; --m) {
    s.tail[m] = suffix;
    suffix += std::fabs(d[m] * v[m]);
  }
  return s;
}

// Smallest M whose tail estimate meets the target; Mc if none does.
int choose_M(const InnerSeries& s, ld target, bool& met) {
  const int Mc = static_cast<int>(s.tail.size()) - 1;
  for (int m = 0; m <= Mc; ++m) {
    if (s.tail[m] <= target) {
      met = true;
      return m;
    }
  }
  met = false;
  return Mc;
}

// Inner sums for one (lambda, t). They do not depend on the outer index n,
// so each is built once: H = sum d_m h_m and S_k = sum d_m Phi_m(alpha, k, tau).
class PointSeries {
 public:
  PointSeries(const Geometry& g, int Mc) : g_(g), Mc_(Mc), d_(shared_dm_table(Mc)) {
    h_ = hermite_kernel_sequence(Mc_, g_.alpha, g_.tau);
    hermite_ = build_inner(*d_, h_, Mc_, beyond_cap_tail(*d_, Mc_, g_.alpha, g_.tau, 0, std::fabs(h_[Mc_])));
  }

  const InnerSeries& hermite() const { return hermite_; }

  const InnerSeries& phi(int k) {
    if (static_cast<int>(phi_.size()) <= k) phi_.resize(static_cast<std::size_t>(k) + 1);
    auto& slot = phi_[k];
    if (!slot) {
      const auto v = phi_sequence(Mc_, g_.alpha, k, g_.tau, h_);
      slot = build_inner(*d_, v, Mc_, beyond_cap_tail(*d_, Mc_, g_.alpha, g_.tau, k, std::fabs(v[Mc_])));
    }
    return *slot;
  }

 private:
  Geometry g_;
  int Mc_;
  std::shared_ptr<const DmTable> d_;
  std::vector<ld> h_;
  InnerSeries hermite_;
  std::vector<std::optional<InnerSeries>> phi_;
};

void check_term_order(int M) {
  if (M < 0) throw DomainError("inner truncation index must be >= 0");
  if (M > kMaxPhiOrder)
    throw TruncationError("inner truncation index exceeds cap " + std::to_string(kMaxPhiOrder), 0.0, INFINITY, 0, M);
}

}  // namespace

TermResult f0_term(const EvalPoint& pt, int M) {
  check_point(pt);
  check_term_order(M);
  PointSeries ps(geometry(pt), kMaxPhiOrder);
  const auto& H = ps.hermite();
  return {static_cast<double>(kSqrtPi * H.partial[M]), static_cast<double>(kSqrtPi * H.tail[M])};
}

TermResult fn_term(int n, const EvalPoint& pt, int M) {
  if (n < 1) throw DomainError("fn_term: n must be >= 1");
  check_point(pt);
  check_term_order(M);
  const AkRow row = ak_row(n);
  PointSeries ps(geometry(pt), kMaxPhiOrder);
  detail::Neumaier<ld> value;
  const auto& H = ps.hermite();
  value.add(row.coeffs[0] * H.partial[M]);
  ld tail = row.coeffs[0] * H.tail[M];
  for (int k = 1; k <= row.kmax; ++k) {
    const auto& S = ps.phi(k);
    value.add(row.coeffs[k] * S.partial[M]);
    tail += std::fabs(row.coeffs[k]) * S.tail[M];
  }
  return {static_cast<double>(value.value()), static_cast<double>(tail)};
}

DensityResult density(const EvalPoint& pt, const ToleranceSpec& tol) {
  check_point(pt);
  if (!(tol.abs_tol >= 1e-14) || tol.max_outer_N < 1 || tol.max_inner_M < 1)
    throw DomainError("tolerance spec: abs_tol must be >= 1e-14 and caps >= 1");
  if (pt.lambda < kMinSupportedLambda) {
    throw TruncationError("lambda = " + std::to_string(pt.lambda) + " is below the supported minimum " +
                              std::to_string(kMinSupportedLambda) +
                              "; the outer series cannot be truncated reliably there",
                          0.0, INFINITY, 0, 0);
  }

  const Geometry g = geometry(pt);
  const int Ncap = tol.max_outer_N;
  const int Mc = std::min(tol.max_inner_M, kMaxPhiOrder);
  const ld P = std::exp(g.log_prefactor);
  const ld abs_tol = tol.abs_tol;
  const auto ak = shared_ak_table(Ncap);
  const int Kcap = ak_kmax(Ncap);

  // Outer weights x^n / n!, x = 1/(2 lambda).
  std::vector<ld> w(static_cast<std::size_t>(Ncap) + 2);
  w[0] = 1;
  for (int n = 1; n <= Ncap + 1; ++n) w[n] = w[n - 1] * g.x / n;

  // W_k = sum_n |a_k^(n)| w_n over the full cap; sets the inner error budgets.
  std::vector<ld> W(static_cast<std::size_t>(Kcap) + 1, 0);
  W[0] = kSqrtPi;
  for (int n = 1; n <= Ncap; ++n) {
    const auto& row = ak->rows[n];
    for (int k = 0; k <= row.kmax; ++k) W[k] += std::fabs(row.coeffs[k]) * w[n];
  }
  auto inner_target = [&](int k) {
    const ld denom = 4.0L * P * W[k];
    return denom > 0 ? abs_tol * std::ldexp(1.0L, -(k + 1)) / denom : kInf;
  };

  PointSeries ps(g, Mc);
  bool inner_met = true;
  std::vector<int> Mk;
  std::vector<ld> Sval;
  auto ensure_k = [&](int k) {
    while (static_cast<int>(Mk.size()) <= k) {
      const int kk = static_cast<int>(Mk.size());
      const InnerSeries& s = kk == 0 ? ps.hermite() : ps.phi(kk);
      bool met = false;
      const int M = choose_M(s, inner_target(kk), met);
      inner_met = inner_met && met;
      Mk.push_back(M);
      Sval.push_back(s.partial[M]);
    }
  };

  ensure_k(0);
  detail::Neumaier<ld> outer;
  ld outer_abs = 0;
  ld cmax = 0;
  int small_run = 0;
  bool outer_met = false;
  ld outer_tail = kInf;

  const ld f0 = kSqrtPi * Sval[0];
  outer.add(f0);
  outer_abs += std::fabs(f0);
  cmax = std::fabs(f0);
  int n_used = 0;

  for (int n = 1; n <= Ncap; ++n) {
    const auto& row = ak->rows[n];
    ensure_k(row.kmax);
    detail::Neumaier<ld> fn;
    ld fn_abs = 0;
    for (int k = 0; k <= row.kmax; ++k) {
      const ld c = row.coeffs[k] * Sval[k];
      fn.add(c);
      fn_abs += std::fabs(c);
    }
    const ld f = fn.value();
    const ld term = f * w[n];
    outer.add(term);
    outer_abs += (std::fabs(term) + fn_abs * w[n]);
    cmax = std::max(cmax, std::fabs(f));
    n_used = n;

    small_run = (std::fabs(term) * P < abs_tol / 10) ? small_run + 1 : 0;
    const ld ratio = g.x / (n + 2);
    outer_tail = ratio < 1 ? cmax * w[n + 1] / (1 - ratio) : kInf;
    if (small_run >= 3 && P * outer_tail <= abs_tol / 4) {
      outer_met = true;
      break;
    }
  }

  // Error estimate with weights restricted to the terms actually summed.
  const int k_used = static_cast<int>(Mk.size()) - 1;
  std::vector<ld> Wu(static_cast<std::size_t>(k_used) + 1, 0);
  Wu[0] = kSqrtPi;
  for (int n = 1; n <= n_used; ++n) {
    const auto& row = ak->rows[n];
    for (int k = 0; k <= row.kmax; ++k) Wu[k] += std::fabs(row.coeffs[k]) * w[n];
  }
  ld inner_err = 0, round_err = 0;
  int m_used = 0;
  for (int k = 0; k <= k_used; ++k) {
    const InnerSeries& s = k == 0 ? ps.hermite() : ps.phi(k);
    inner_err += Wu[k] * s.tail[Mk[k]];
    round_err += Wu[k] * s.abs_partial[Mk[k]];
    m_used = std::max(m_used, Mk[k]);
  }
  round_err = 16 * kEps * (round_err + outer_abs);
  const ld err = P * (outer_tail + inner_err + round_err);

  DensityResult r;
  r.value = static_cast<double>(P * outer.value());
  r.err_estimate = static_cast<double>(err);
  r.n_used = n_used;
  r.m_used = m_used;
  r.prefactor = static_cast<double>(P);

  if (!outer_met || !inner_met || !(err <= abs_tol)) {
    std::string why = !outer_met   ? "outer series cap N=" + std::to_string(Ncap) + " reached"
                      : !inner_met ? "inner series cap M=" + std::to_string(Mc) + " reached"
                                   : "error estimate above tolerance";
    char buf[64];
    std::snprintf(buf, sizeof buf, " (err_estimate %.3g)", r.err_estimate);
    throw TruncationError(why + buf, r.value,
                          r.err_estimate, r.n_used, r.m_used);
  }
  return r;
}

DensityOutcome evaluate_density(const EvalPoint& pt, const ToleranceSpec& tol) {
  DensityOutcome out;
  out.point = pt;
  try {
    out.result = density(pt, tol);
  } catch (const TruncationError& e) {
    out.status = EvalStatus::truncated;
    out.message = e.what();
    out.result.value = e.partial_value;
    out.result.err_estimate = e.err_estimate;
    out.result.n_used = e.n_used;
    out.result.m_used = e.m_used;
  } catch (const DomainError& e) {
    out.status = EvalStatus::domain_error;
    out.message = e.what();
  }
  return out;
}

namespace {

void check_grid(const std::vector<double>& grid, double t) {
  if (grid.empty()) throw DomainError("tabulate: empty lambda grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw DomainError("tabulate: lambda grid must be strictly increasing");
  check_point({1.0, t});
}

}  // namespace

std::vector<DensityOutcome> tabulate_serial(const std::vector<double>& lambda_grid, double t,
                                            const ToleranceSpec& tol) {
  check_grid(lambda_grid, t);
  std::vector<DensityOutcome> out(lambda_grid.size());
  for (std::size_t i = 0; i < lambda_grid.size(); ++i) out[i] = evaluate_density({lambda_grid[i], t}, tol);
  return out;
}

std::vector<DensityOutcome> tabulate(const std::vector<double>& lambda_grid, double t, const ToleranceSpec& tol) {
  check_grid(lambda_grid, t);
  // Build the shared tables before the parallel region.
  shared_dm_table(std::min(tol.max_inner_M, kMaxPhiOrder));
  shared_ak_table(std::max(tol.max_outer_N, 1));
  std::vector<DensityOutcome> out(lambda_grid.size());
  const auto n = static_cast<long>(lambda_grid.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) out[i] = evaluate_density({lambda_grid[i], t}, tol);
  return out;
}

std::vector<double> lambda_grid(double lambda_min, double lambda_max, double step) {
  if (!(step > 0) || !std::isfinite(step)) throw DomainError("grid step must be positive");
  if (!(lambda_max >= lambda_min)) throw DomainError("lambda_max must be >= lambda_min");
  const auto count = static_cast<long>(std::floor((lambda_max - lambda_min) / step + 1e-9)) + 1;
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) grid[i] = lambda_min + static_cast<double>(i) * step;
  return grid;
}

}  // namespace expbm

#pragma once

#include <string>
#include <vector>

namespace expbm {

// Below this lambda the outer series needs far more terms than long double can
// carry through the cancellation; density() refuses with a TruncationError.
inline constexpr double kMinSupportedLambda = 0.05;

struct EvalPoint {
  double lambda = 1.0;
  double t = 1.0;
};

struct ToleranceSpec {
  double abs_tol = 1e-10;
  int max_outer_N = 200;
  int max_inner_M = 400;
};

struct DensityResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int n_used = 0;
  int m_used = 0;
  double prefactor = 0.0;
};

struct TermResult {
  double value = 0.0;
  double tail = 0.0;  // estimate of the dropped inner remainder
};

// f_0 and f_n (n >= 1) truncated at inner index M, with tail estimates.
TermResult f0_term(const EvalPoint& pt, int M);
TermResult fn_term(int n, const EvalPoint& pt, int M);

// Throws DomainError for bad input and TruncationError when a cap is hit.
DensityResult density(const EvalPoint& pt, const ToleranceSpec& tol = {});

enum class EvalStatus { ok, truncated, domain_error };

struct DensityOutcome {
  EvalPoint point;
  DensityResult result;  // partial value on truncation
  EvalStatus status = EvalStatus::ok;
  std::string message;
};

DensityOutcome evaluate_density(const EvalPoint& pt, const ToleranceSpec& tol = {});

// Per-point errors are collected in the outcomes. Empty or non-increasing grids throw.
std::vector<DensityOutcome> tabulate(const std::vector<double>& lambda_grid, double t, const ToleranceSpec& tol = {});
std::vector<DensityOutcome> tabulate_serial(const std::vector<double>& lambda_grid, double t,
                                            const ToleranceSpec& tol = {});

// lambda_min, lambda_min + step, ... up to lambda_max (inclusive, with slack for rounding).
std::vector<double> lambda_grid(double lambda_min, double lambda_max, double step);

}  // namespace expbm

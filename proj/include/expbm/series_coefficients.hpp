#pragma once

#include <memory>
#include <vector>

namespace expbm {

inline int ak_kmax(int n) { return (n - 1) / 2 + 1; }

// Partial-fraction coefficients of r_n(w) = sum_k a_k / (w + k).
struct AkRow {
  int n = 0;
  int kmax = 0;
  std::vector<long double> coeffs;  // a_0 .. a_kmax
};

AkRow ak_row(int n);

// r_n(w) evaluated directly from its product form.
double r_n_eval(int n, double w);

// Rows 1..n_max, shared and immutable; regrown (copy, then publish) on demand.
struct AkTable {
  std::vector<AkRow> rows;  // rows[n], rows[0] unused
  int n_max = 0;
};
std::shared_ptr<const AkTable> shared_ak_table(int n_max);

}  // namespace expbm

#pragma once

#include <vector>

namespace expbm {

inline constexpr int kMaxPhiOrder = 400;

struct PhiArgs {
  double alpha = 0.0;  // ln a
  int beta = 1;        // pole shift k
  double tau = 1.0;    // 2t
};

// (1/sqrt(pi tau)) (2 sqrt tau)^{-m} e^{-alpha^2/(4 tau)} H_m(alpha / (2 sqrt tau))
double h_kernel(int m, double alpha, double tau);

// h_0..h_M by the scaled three-term recurrence.
std::vector<long double> hermite_kernel_sequence(int M, long double alpha, long double tau);

// Inverse Laplace transform of e^{-alpha sqrt z} / (sqrt z + beta) at time tau.
double phi0(double alpha, int beta, double tau);
long double phi0(long double alpha, int beta, long double tau);

double phi_m(int m, double alpha, int beta, double tau);
inline double phi_m(int m, const PhiArgs& a) { return phi_m(m, a.alpha, a.beta, a.tau); }

// Phi_0..Phi_M given h_0..h_M (h.size() > M): Phi_m = h_m - beta Phi_{m-1}.
std::vector<long double> phi_sequence(int M, long double alpha, int beta, long double tau,
                                      const std::vector<long double>& h);

}  // namespace expbm

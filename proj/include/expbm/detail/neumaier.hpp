#pragma once

#include <cmath>

namespace expbm::detail {

template <class Real>
struct Neumaier {
  Real sum = 0;
  Real comp = 0;

  void add(Real x) {
    const Real s = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - s) + x;
    else
      comp += (x - s) + sum;
    sum = s;
  }
  Real value() const { return sum + comp; }
};

}  // namespace expbm::detail

#pragma once

#include <stdexcept>
#include <string>

namespace expbm {

// Bad input: nonpositive lambda/t, pole arguments, out-of-envelope oracle calls.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A series hit its hard cap before the tail fell below tolerance.
// Carries whatever partial value was accumulated.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double partial, double err_estimate,
                  int n_used, int m_used)
      : std::runtime_error(what),
        partial_value(partial),
        err_estimate(err_estimate),
        n_used(n_used),
        m_used(m_used) {}

  double partial_value;
  double err_estimate;
  int n_used;
  int m_used;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace expbm

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "expbm/density.hpp"

namespace expbm {

struct CsvRow {
  double lambda = 0.0;
  double t = 0.0;
  double f = 0.0;
  double abs_err = 0.0;
  int n_used = 0;
  int m_used = 0;
  std::string flag;  // empty on success
};

std::string_view csv_header();  // lambda,t,f,abs_err,n_used,m_used

// f with 10 significant digits, '.' decimal point regardless of locale.
// Failed points get a trailing flag column ("truncated" or "domain_error").
std::string format_csv_row(const DensityOutcome& outcome);
std::optional<CsvRow> parse_csv_row(std::string_view line);

}  // namespace expbm

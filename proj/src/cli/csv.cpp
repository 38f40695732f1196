#include "expbm/csv.hpp"

#include <fmt/format.h>

#include <charconv>
#include <vector>

namespace expbm {

std::string_view csv_header() { return "lambda,t,f,abs_err,n_used,m_used"; }

std::string format_csv_row(const DensityOutcome& o) {
  std::string row = fmt::format("{:.10g},{:.10g},{:.10g},{:.3e},{},{}", o.point.lambda, o.point.t, o.result.value,
                                o.result.err_estimate, o.result.n_used, o.result.m_used);
  switch (o.status) {
    case EvalStatus::ok:
      break;
    case EvalStatus::truncated:
      row += ",truncated";
      break;
    case EvalStatus::domain_error:
      row += ",domain_error";
      break;
  }
  return row;
}

namespace {

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(',', start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <class T>
bool parse(std::string_view s, T& out) {
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

std::optional<CsvRow> parse_csv_row(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto parts = split(line);
  if (parts.size() != 6 && parts.size() != 7) return std::nullopt;
  CsvRow r;
  if (!parse(parts[0], r.lambda) || !parse(parts[1], r.t) || !parse(parts[2], r.f) || !parse(parts[3], r.abs_err) ||
      !parse(parts[4], r.n_used) || !parse(parts[5], r.m_used))
    return std::nullopt;
  if (parts.size() == 7) r.flag = std::string(parts[6]);
  return r;
}

}  // namespace expbm

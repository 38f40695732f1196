#include <fmt/format.h>
#include <fmt/ostream.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "expbm/cli.hpp"
#include "expbm/csv.hpp"
#include "expbm/density.hpp"
#include "expbm/errors.hpp"
#include "expbm/montecarlo.hpp"
#include "expbm/oracles.hpp"
#include "expbm/quadrature.hpp"
#include "expbm/reference_table.hpp"

namespace expbm {

namespace {

struct EvalArgs {
  double lambda = 0.0;
  double t = 0.0;
  double tol = 1e-10;
};

struct TableArgs {
  double lambda_min = 0.25;
  double lambda_max = 2.0;
  double step = 0.01;
  double t = 1.0;
  double tol = 1e-10;
  std::string out = "-";
};

struct ValidateArgs {
  double tol_a = 5e-9;
  double tol_b = 1e-6;
};

struct OracleArgs {
  std::string mode;
  double lambda = 1.0;
  double t = 1.0;
  long paths = 100000;
  int steps = 64;
  std::uint64_t seed = 42;
  int nodes = 32;
};

ToleranceSpec tolerance(double tol) {
  ToleranceSpec spec;
  spec.abs_tol = tol;
  return spec;
}

void write_rows(std::ostream& os, const std::vector<DensityOutcome>& rows) {
  os << csv_header() << '\n';
  for (const auto& r : rows) os << format_csv_row(r) << '\n';
}

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  const auto o = evaluate_density({a.lambda, a.t}, tolerance(a.tol));
  if (o.status == EvalStatus::domain_error) {
    fmt::print(err, "error: {}\n", o.message);
    return kExitUsage;
  }
  write_rows(out, {o});
  if (o.status == EvalStatus::truncated) {
    fmt::print(err, "error: {}\n", o.message);
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<double> grid;
  try {
    if (!(a.lambda_min > 0)) throw DomainError("lambda-min must be positive");
    grid = lambda_grid(a.lambda_min, a.lambda_max, a.step);
  } catch (const DomainError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  }
  std::ofstream file;
  std::ostream* os = &out;
  if (a.out != "-") {
    file.open(a.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      fmt::print(err, "error: cannot open {} for writing\n", a.out);
      return kExitUsage;
    }
    os = &file;
  }
  const auto rows = tabulate(grid, a.t, tolerance(a.tol));
  write_rows(*os, rows);
  os->flush();
  if (!*os) {
    fmt::print(err, "error: write to {} failed\n", a.out);
    return kExitUsage;
  }
  const auto failed = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.status != EvalStatus::ok; });
  if (failed > 0) {
    fmt::print(err, "{} of {} points did not converge (flagged in the last column)\n", failed, rows.size());
    return kExitNumerical;
  }
  return kExitOk;
}

struct Band {
  const char* name;
  double lo, hi;  // [lo, hi) or [lo, hi] when closed
  bool closed;
  double limit;  // < 0: informational
};

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
  const auto ref = reference_density_table();
  std::vector<double> grid;
  for (const auto& e : ref) grid.push_back(e.lambda);
  const auto rows = tabulate(grid, kReferenceT, tolerance(1e-10));

  const Band bands[] = {{"[0.25, 2.00]", 0.25, 2.0, true, a.tol_a},
                        {"[0.10, 0.25)", 0.10, 0.25, false, a.tol_b},
                        {"[0.01, 0.10)", 0.01, 0.10, false, -1.0}};
  bool pass = true;
  for (const auto& b : bands) {
    double max_dev = 0.0, at = 0.0;
    int count = 0, failed = 0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      const double lam = ref[i].lambda;
      const bool in = lam >= b.lo - 1e-12 && (b.closed ? lam <= b.hi + 1e-12 : lam < b.hi - 1e-12);
      if (!in) continue;
      ++count;
      if (rows[i].status != EvalStatus::ok) {
        ++failed;
        continue;
      }
      const double dev = std::fabs(rows[i].result.value - ref[i].f);
      if (dev > max_dev) {
        max_dev = dev;
        at = lam;
      }
    }
    const bool gating = b.limit >= 0;
    const bool ok = !gating || (failed == 0 && max_dev <= b.limit);
    pass = pass && ok;
    std::string status = gating ? (ok ? "PASS" : "FAIL") : "INFO";
    fmt::print(out, "{} band {}: {} points, max |dev| = {:.3e} at lambda = {:.2f}", status, b.name, count, max_dev, at);
    if (gating) fmt::print(out, " (limit {:.1e})", b.limit);
    if (failed > 0) fmt::print(out, ", {} outside the supported range", failed);
    out << '\n';
  }
  fmt::print(out, "{}\n", pass ? "validation PASS" : "validation FAIL");
  return pass ? kExitOk : kExitNumerical;
}

int oracle_talbot(const OracleArgs& a, std::ostream& out, std::ostream& err) {
  TalbotConfig cfg;
  cfg.node_count = a.nodes;
  double inv = 0.0;
  try {
    inv = talbot_density(a.lambda, a.t, cfg);
  } catch (const DomainError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitNumerical;
  }
  const auto o = evaluate_density({a.lambda, a.t});
  if (o.status != EvalStatus::ok) {
    fmt::print(err, "error: {}\n", o.message);
    return o.status == EvalStatus::domain_error ? kExitUsage : kExitNumerical;
  }
  const double diff = std::fabs(o.result.value - inv);
  constexpr double limit = 2e-6;
  fmt::print(out, "series  f({:.10g}, {:.10g}) = {:.12g}\n", a.lambda, a.t, o.result.value);
  fmt::print(out, "talbot  f({:.10g}, {:.10g}) = {:.12g} ({} nodes)\n", a.lambda, a.t, inv, cfg.node_count);
  fmt::print(out, "|diff| = {:.3e} (limit {:.1e}) {}\n", diff, limit, diff <= limit ? "PASS" : "FAIL");
  return diff <= limit ? kExitOk : kExitNumerical;
}

int oracle_mc(const OracleArgs& a, std::ostream& out, std::ostream& err, bool lambda_given) {
  McConfig cfg;
  cfg.paths = a.paths;
  cfg.steps_per_unit_time = a.steps;
  cfg.seed = a.seed;
  cfg.t = a.t;
  std::vector<double> samples;
  try {
    samples = mc_sample(cfg);
  } catch (const DomainError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  }
  const auto est = mc_summarize(samples, cfg.seed);
  const double exact = std::expm1(2.0 * a.t) / 2.0;
  const double z = est.std_error > 0 ? (est.mean - exact) / est.std_error : 0.0;
  bool pass = std::fabs(z) <= 3.0;
  fmt::print(out, "mc mean = {:.8g} +- {:.3g} ({} paths, {} steps, seed {})\n", est.mean, est.std_error, est.samples,
             mc_total_steps(cfg), est.seed);
  fmt::print(out, "exact mean (e^(2t)-1)/2 = {:.10g}, z = {:.3f} {}\n", exact, z, std::fabs(z) <= 3.0 ? "PASS" : "FAIL");
  if (lambda_given) {
    const auto cdf = empirical_cdf(samples, {a.lambda}).front();
    double series = 0.0;
    try {
      series = series_cdf(a.lambda, a.t);
    } catch (const std::exception& e) {
      fmt::print(err, "error: series CDF: {}\n", e.what());
      return kExitNumerical;
    }
    const double zc = cdf.std_error > 0 ? (cdf.cdf - series) / cdf.std_error : 0.0;
    const bool ok = std::fabs(zc) <= 3.0;
    pass = pass && ok;
    fmt::print(out, "cdf({:.10g}): mc = {:.6f} +- {:.2e}, series = {:.6f}, z = {:.3f} {}\n", a.lambda, cdf.cdf,
               cdf.std_error, series, zc, ok ? "PASS" : "FAIL");
  }
  return pass ? kExitOk : kExitNumerical;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Density of the exponential Brownian functional int_0^t exp(2B(s)) ds"};
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate f(lambda, t) at one point");
  eval->add_option("--lambda", ev.lambda, "lambda > 0")->required();
  eval->add_option("--t", ev.t, "t > 0")->required();
  eval->add_option("--tol", ev.tol, "absolute tolerance")->check(CLI::Range(1e-12, 1e-2));

  TableArgs tb;
  auto* table = app.add_subcommand("table", "Tabulate f over a lambda grid as CSV");
  table->add_option("--lambda-min", tb.lambda_min)->required();
  table->add_option("--lambda-max", tb.lambda_max)->required();
  table->add_option("--step", tb.step)->required();
  table->add_option("--t", tb.t)->required();
  table->add_option("--tol", tb.tol)->check(CLI::Range(1e-12, 1e-2));
  table->add_option("--out", tb.out, "output file, - for stdout");

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Compare against the embedded reference values at t = 1");
  validate->add_option("--tol-a", va.tol_a, "limit on lambda in [0.25, 2.00]");
  validate->add_option("--tol-b", va.tol_b, "limit on lambda in [0.10, 0.25)");

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "Cross-check against Talbot inversion or Monte Carlo");
  oracle->add_option("--mode", oa.mode)->required()->check(CLI::IsMember({"talbot", "mc"}));
  auto* lam_opt = oracle->add_option("--lambda", oa.lambda);
  oracle->add_option("--t", oa.t);
  oracle->add_option("--paths", oa.paths)->check(CLI::PositiveNumber);
  oracle->add_option("--steps", oa.steps, "steps per unit time (mc)")->check(CLI::Range(16, 1 << 20));
  oracle->add_option("--seed", oa.seed);
  oracle->add_option("--nodes", oa.nodes, "Talbot contour nodes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    fmt::print(err, "usage error: {}\n{}", e.what(), app.help());
    return kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(ev, out, err);
    if (*table) return cmd_table(tb, out, err);
    if (*validate) return cmd_validate(va, out);
    if (*oracle) return oa.mode == "talbot" ? oracle_talbot(oa, out, err) : oracle_mc(oa, out, err, lam_opt->count() > 0);
  } catch (const DomainError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace expbm

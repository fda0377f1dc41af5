#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <numbers>
#include <ostream>
#include <vector>

#include "qfl/qfl.hpp"
#include "svg.hpp"

namespace qfl::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json big_to_json(const mpz_class& v) {
  if (v >= 0 && mpz_fits_ulong_p(v.get_mpz_t())) return json(static_cast<std::uint64_t>(v.get_ui()));
  return json(v.get_str());
}

// Writes `text` to cfg.out, or to the stream when no path is given.
void deliver(const RunConfig& cfg, const std::string& text, std::ostream& out, const std::string& path_override = {}) {
  const std::string& path = path_override.empty() ? cfg.out : path_override;
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  file << text;
  if (!file) throw Error(ErrorCode::Io, "write failed for " + path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

SequenceSpec spec_of(const RunConfig& cfg) {
  try {
    return validate_b(cfg.b);
  } catch (const Error& e) {
    throw UsageError(std::string("--b: ") + e.what());
  }
}

void require_x(const RunConfig& cfg, std::uint64_t minimum) {
  if (cfg.x < minimum) throw UsageError("--x must be >= " + std::to_string(minimum));
}

void require_format(const RunConfig& cfg, std::initializer_list<Format> allowed) {
  for (Format f : allowed) {
    if (f == cfg.format) return;
  }
  throw UsageError("--format not supported by '" + cfg.subcommand + "'");
}

unsigned threads_of(const RunConfig& cfg) { return resolve_threads(cfg.threads); }

void cmd_density(const RunConfig& cfg, std::ostream& out) {
  const auto spec = spec_of(cfg);
  require_x(cfg, 1);
  const auto cps = even_checkpoints(cfg.x, cfg.checkpoints);
  const auto report = rho(spec, cps, threads_of(cfg), cfg.segment_size);
  switch (cfg.format) {
    case Format::Csv: deliver(cfg, density_csv(report), out); break;
    case Format::Json: {
      json rows = json::array();
      for (const auto& c : report.checkpoints) rows.push_back({{"x", c.x}, {"rho", c.rho}, {"ratio", c.ratio}});
      deliver(cfg, dump({{"b", report.b}, {"checkpoints", rows}, {"log2", std::numbers::ln2}}), out);
      break;
    }
    case Format::Svg: {
      std::vector<Point> series;
      for (const auto& c : report.checkpoints) series.emplace_back(static_cast<double>(c.x), c.ratio);
      deliver(cfg, svg_document(series, std::numbers::ln2, "rho_b(x)/x for b = " + std::to_string(report.b)), out);
      break;
    }
  }
}

void cmd_census(const RunConfig& cfg, std::ostream& out) {
  const auto spec = spec_of(cfg);
  require_x(cfg, 1);
  require_format(cfg, {Format::Csv, Format::Json});
  const auto census = non_primitive_census(spec, cfg.x, threads_of(cfg), cfg.segment_size);
  if (cfg.format == Format::Csv) {
    deliver(cfg, census_csv(census), out);
    return;
  }
  json j = {{"b", spec.b()},
            {"x", cfg.x},
            {"count", census.count()},
            {"rho", cfg.x - census.count()},
            {"non_primitive", census.non_primitive}};
  if (cfg.x >= 3) {
    const double xd = static_cast<double>(cfg.x);
    j["count_over_x_over_log_x"] = static_cast<double>(census.count()) / (xd / std::log(xd));
  }
  deliver(cfg, dump(j), out);
}

void cmd_chebyshev(const RunConfig& cfg, std::ostream& out) {
  const auto spec = spec_of(cfg);
  require_x(cfg, 2);
  require_format(cfg, {Format::Csv, Format::Json});
  if (!(cfg.K > 2.0)) throw UsageError("--K must exceed 2");
  const auto r = chebyshev_report(spec, cfg.x, cfg.K, threads_of(cfg), cfg.segment_size);
  if (cfg.format == Format::Csv) {
    deliver(cfg, chebyshev_csv(r), out);
    return;
  }
  const double xd = static_cast<double>(r.x);
  deliver(cfg,
          dump({{"b", spec.b()},
                {"x", r.x},
                {"K", r.K},
                {"log_Qx", r.log_Qx},
                {"sum_S", r.sum_S},
                {"sum_Sprime", r.sum_Sprime},
                {"s", r.s},
                {"sprime", r.s_prime},
                {"t", r.t},
                {"u", r.u},
                {"boundary", r.boundary},
                {"max_exponent_Sprime", r.max_exponent_Sprime},
                {"log_Qx_over_2x_log_x", r.log_Qx / (2 * xd * std::log(xd))},
                {"sum_Sprime_over_x_log_x", r.sum_Sprime / (xd * std::log(xd))}}),
          out);
}

void cmd_nx(const RunConfig& cfg, std::ostream& out) {
  const auto spec = spec_of(cfg);
  require_x(cfg, 2);
  require_format(cfg, {Format::Csv, Format::Json});
  const auto hist = nx_histogram(spec, cfg.x, threads_of(cfg), cfg.segment_size);
  const auto windows = vx_windows(hist);
  if (cfg.format == Format::Csv) {
    deliver(cfg, nx_csv(hist), out);
    if (!cfg.vx_out.empty()) deliver(cfg, vx_csv(windows), out, cfg.vx_out);
    return;
  }
  json counts = json::array();
  for (const auto& [p, c] : hist.counts) counts.push_back({p, c});
  json wins = json::array();
  for (const auto& w : windows) wins.push_back({{"v", w.v}, {"V", w.V}, {"x_over_log_v", w.x_over_log_v}});
  deliver(cfg,
          dump({{"b", spec.b()},
                {"x", hist.x},
                {"N_total", hist.total},
                {"N_weighted", hist.weighted},
                {"x_log_x", static_cast<double>(hist.x) * std::log(static_cast<double>(hist.x))},
                {"N", counts},
                {"V", wins}}),
          out);
}

void cmd_chowla_todd(const RunConfig& cfg, std::ostream& out) {
  require_x(cfg, 2);
  auto cps = even_checkpoints(cfg.x, cfg.checkpoints);
  std::erase_if(cps, [](std::uint64_t c) { return c < 2; });
  const auto series = chowla_todd_series(cps, threads_of(cfg));
  switch (cfg.format) {
    case Format::Csv: deliver(cfg, density_ct_csv(series), out); break;
    case Format::Json: {
      json rows = json::array();
      for (const auto& d : series) rows.push_back({{"x", d.x}, {"count", d.count}, {"ratio", d.ratio}});
      deliver(cfg, dump({{"checkpoints", rows}, {"log2", std::numbers::ln2}}), out);
      break;
    }
    case Format::Svg: {
      std::vector<Point> pts;
      for (const auto& d : series) pts.emplace_back(static_cast<double>(d.x), d.ratio);
      deliver(cfg, svg_document(pts, std::numbers::ln2, "Chowla-Todd density"), out);
      break;
    }
  }
}

void cmd_mertens(const RunConfig& cfg, std::ostream& out) {
  require_x(cfg, 3);
  require_format(cfg, {Format::Csv, Format::Json});
  const double sum = mertens_sum(cfg.x);
  const double loglog = std::log(std::log(static_cast<double>(cfg.x)));
  if (cfg.format == Format::Csv) {
    deliver(cfg,
            "x,sum,log_log_x,drift\n" + std::to_string(cfg.x) + ',' + format_real(sum) + ',' + format_real(loglog) +
                ',' + format_real(sum - loglog) + '\n',
            out);
    return;
  }
  deliver(cfg, dump({{"x", cfg.x}, {"sum", sum}, {"log_log_x", loglog}, {"drift", sum - loglog}}), out);
}

void cmd_constants(const RunConfig& cfg, std::ostream& out) {
  const auto sigma = solve_sigma();
  const auto theta = solve_theta();
  const auto ab = solve_alpha_beta();
  const auto bnd = bounds();
  const auto conj = conjectural_sigma();
  const double integral_log2 = integrate([](double t) { return 2.0 / (t - 1.0); }, ab.alpha, ab.beta);
  const double integral_one = integrate([](double t) { return 2.0 * t / (t - 1.0); }, ab.alpha, ab.beta);
  json j = {
      {"sigma", sigma.value},
      {"sigma_bisection", sigma.bisection},
      {"sigma_residual", sigma.residual},
      {"theta", theta.value},
      {"theta_bisection", theta.bisection},
      {"theta_residual", theta.residual},
      {"theta_iterates", theta.iterates},
      {"alpha", ab.alpha},
      {"beta", ab.beta},
      {"alpha_closed_form", ab.alpha_closed_form},
      {"beta_closed_form", ab.beta_closed_form},
      {"alpha_beta_residuals", {ab.residual_log2, ab.residual_one}},
      {"upper_bound", bnd.upper},
      {"lower_bound", bnd.lower},
      {"upper_below_0_905", bnd.upper_below_0_905},
      {"lower_exceeds_0_5324", bnd.lower_exceeds_0_5324},
      {"conjectural_sigma", conj.value},
      {"conjectural_sigma_printed", conj.printed},
      {"conjectural_sigma_discrepancy", conj.discrepancy},
      {"identities",
       {{"upper_integral_minus_4_log_2_minus_sigma", -4.0 * std::log(2.0 - sigma.value) - bnd.upper},
        {"lower_integral_minus_2_log_theta_minus_1", -2.0 * std::log(theta.value - 1.0) - bnd.lower},
        {"beta_minus_1_over_alpha_minus_1_minus_sqrt2", (ab.beta - 1.0) / (ab.alpha - 1.0) - std::numbers::sqrt2},
        {"beta_minus_alpha_minus_half_1_minus_log2", ab.beta - ab.alpha - (1.0 - std::numbers::ln2) / 2.0},
        {"quadrature_log2_residual", integral_log2 - std::numbers::ln2},
        {"quadrature_one_residual", integral_one - 1.0}}},
  };
  deliver(cfg, dump(j), out);
}

void cmd_stormer(const RunConfig& cfg, std::ostream& out) {
  if (cfg.B < 3) throw UsageError("--bound must be >= 3");
  StormerOptions opt;
  if (cfg.k_max > 0) {
    if (cfg.k_max % 2 == 0) throw UsageError("--kmax must be odd");
    opt.k_max = cfg.k_max;
  }
  opt.digit_cap = cfg.digit_cap;
  opt.threads = threads_of(cfg);
  const auto r = stormer_search(cfg.B, opt);
  json sols = json::array();
  for (const auto& n : r.solutions) sols.push_back(big_to_json(n));
  json truncated = json::array();
  for (const auto& d : r.truncated_Ds) truncated.push_back(big_to_json(d));
  deliver(cfg,
          dump({{"B", r.B},
                {"solutions", sols},
                {"max_n", big_to_json(r.max_n)},
                {"truncated_Ds", truncated},
                {"k_max", r.k_max},
                {"equations", r.equations},
                {"solvable_equations", r.solvable}}),
          out);
}

void cmd_sieve(const RunConfig& cfg, std::ostream& out) {
  const auto spec = spec_of(cfg);
  require_x(cfg, 1);
  require_format(cfg, {Format::Csv});
  if (cfg.lo < 1 || cfg.lo > cfg.x) throw UsageError("--lo must lie in [1, x]");
  SieveConfig sc;
  sc.lo = cfg.lo;
  sc.hi = cfg.x + 1;
  sc.segment_size = cfg.segment_size;
  std::string text = std::string(kSieveCsvHeader) + "\n";
  sieve_range(
      spec, sc, [&](const TermFactorization& tf) { text += sieve_csv_row(tf) + '\n'; }, threads_of(cfg));
  deliver(cfg, text, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"qfl: primitive divisors and large prime factors of n^2 + b"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}, {"svg", Format::Svg}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "Worker threads (default: $QFL_THREADS, else 1)");
    sub->add_option("--format", cfg.format, "Output format: csv, json or svg")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out, "Output file (default: stdout)");
  };
  auto sequence = [&](CLI::App* sub) {
    sub->add_option("--b", cfg.b, "Shift b of the sequence n^2 + b (-b must not be a square)");
    sub->add_option("--segment-size", cfg.segment_size, "Sieve segment length")->check(CLI::PositiveNumber);
  };

  struct Entry {
    CLI::App* app;
    std::function<void(const RunConfig&, std::ostream&)> handler;
  };
  std::vector<Entry> entries;

  auto* density = app.add_subcommand(
      "density", "rho_b(x): number of n <= x for which n^2 + b has a primitive divisor, and the ratio rho_b(x)/x");
  sequence(density);
  common(density);
  density->add_option("--x", cfg.x, "Scan length x")->required();
  density->add_option("--checkpoints", cfg.checkpoints, "Number of evenly spaced checkpoints")
      ->check(CLI::PositiveNumber);
  entries.push_back({density, cmd_density});

  auto* census = app.add_subcommand(
      "census", "Indices n <= x whose term n^2 + b has no primitive divisor, and their count x - rho_b(x)");
  sequence(census);
  common(census);
  census->add_option("--x", cfg.x, "Scan length x")->required();
  entries.push_back({census, cmd_census});

  auto* cheb = app.add_subcommand(
      "chebyshev",
      "log Q_x with Q_x = prod |n^2 + b| over n <= x, split into sum_S (p < 2x, weighted by e_p) and sum_Sprime "
      "(p >= 2x), with counts s, s', t (2x < p < Kx) and u (p >= Kx)");
  sequence(cheb);
  common(cheb);
  cheb->add_option("--x", cfg.x, "Product length x")->required();
  cheb->add_option("--K", cfg.K, "Partition parameter K > 2");
  entries.push_back({cheb, cmd_chebyshev});

  auto* nx = app.add_subcommand(
      "nx", "N_x(p): number of n in [x, 2x) with p | n^2 + b for primes p >= 2x, and window sums V_x(v) over (v, ev]");
  sequence(nx);
  common(nx);
  nx->add_option("--x", cfg.x, "Interval start x")->required();
  nx->add_option("--vx-out", cfg.vx_out, "Also write the V_x(v) windows as CSV to this file");
  entries.push_back({nx, cmd_nx});

  auto* ct = app.add_subcommand(
      "chowla-todd", "Count of 2 <= m <= x with P+(m) > 2 sqrt(m) (Chowla-Todd numbers) and the ratio to x");
  common(ct);
  ct->add_option("--x", cfg.x, "Upper limit x")->required();
  ct->add_option("--checkpoints", cfg.checkpoints, "Number of evenly spaced checkpoints")->check(CLI::PositiveNumber);
  entries.push_back({ct, cmd_chowla_todd});

  auto* mertens = app.add_subcommand("mertens", "Mertens sum: sum of 1/p over primes p < x, and its drift from log log x");
  common(mertens);
  mertens->add_option("--x", cfg.x, "Upper limit x (exclusive)")->required();
  entries.push_back({mertens, cmd_mertens});

  auto* constants = app.add_subcommand(
      "constants",
      "Constants sigma, theta, alpha, beta of the density bounds, the bounds 2 sigma - 3/2 and 2 theta - 3, "
      "residuals and identity checks, as JSON");
  constants->add_option("--out", cfg.out, "Output file (default: stdout)");
  entries.push_back({constants, cmd_constants});

  auto* stormer = app.add_subcommand(
      "stormer", "All n with P+(n^2 + 1) < B, via the negative Pell equations x^2 - D y^2 = -1, as JSON");
  stormer->add_option("--bound", cfg.B, "Smoothness bound B")->required();
  stormer->add_option("--kmax", cfg.k_max, "Largest odd power of the fundamental solution (default max(13, ~B/2))");
  stormer->add_option("--digit-cap", cfg.digit_cap, "Give up on a D once solutions exceed this many digits");
  stormer->add_option("--threads", cfg.threads, "Worker threads (default: $QFL_THREADS, else 1)");
  stormer->add_option("--out", cfg.out, "Output file (default: stdout)");
  entries.push_back({stormer, cmd_stormer});

  auto* sieve = app.add_subcommand(
      "sieve", "Raw factorizations of n^2 + b for lo <= n <= x as CSV rows n,sign,factors,cofactor");
  sequence(sieve);
  common(sieve);
  sieve->add_option("--x", cfg.x, "Last index x")->required();
  sieve->add_option("--lo", cfg.lo, "First index (default 1)");
  entries.push_back({sieve, cmd_sieve});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    for (const auto& entry : entries) {
      if (entry.app->parsed()) {
        cfg.subcommand = entry.app->get_name();
        entry.handler(cfg, out);
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace qfl::cli

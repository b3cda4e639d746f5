#include "stablesup_cli/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <span>
#include <sstream>

#include "stablesup/asymptotics.hpp"
#include "stablesup/config.hpp"
#include "stablesup/errors.hpp"
#include "stablesup/laplace.hpp"
#include "stablesup/montecarlo.hpp"
#include "stablesup/oscint.hpp"
#include "stablesup/params.hpp"
#include "stablesup/series.hpp"
#include "stablesup/special.hpp"

namespace stablesup::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  double alpha = 0.0;
  std::optional<double> c;
  std::vector<double> x_grid;
  std::vector<double> lambda_grid;
  std::string method = "auto";
  std::string format = "csv";
  std::string out;
  std::size_t paths = defaults::kMcPaths;
  std::size_t steps = defaults::kMcSteps;
  std::uint64_t seed = defaults::kMcSeed;
  std::optional<double> tol;
};

struct Context {
  Options opt;
  StableSpec spec{};
  QuadConfig cfg;
  double series_tol = defaults::kSeriesTol;
  std::ostream* err = nullptr;
};

Json to_json(const std::map<std::string, double>& diagnostics) {
  Json j = Json::object();
  for (const auto& [k, v] : diagnostics) {
    if (std::isfinite(v)) j[k] = v;
  }
  return j;
}

OutputRow make_row(double alpha, double x, Method m, std::optional<double> value = std::nullopt,
                   std::optional<double> error = std::nullopt) {
  OutputRow row;
  row.alpha = alpha;
  row.x_or_lambda = x;
  row.method = m;
  row.value = value;
  row.error_estimate = error;
  return row;
}

void fill(OutputRow& row, const EvalResult& r) {
  row.method = r.method;
  row.value = r.value;
  if (std::isfinite(r.abs_error)) row.error_estimate = r.abs_error;
  row.diagnostics.update(to_json(r.diagnostics));
}

void mark_error(OutputRow& row, const std::exception& e) {
  row.value.reset();
  row.error_estimate.reset();
  row.diagnostics["error"] = e.what();
}

std::vector<double> or_default(const std::vector<double>& grid, std::span<const double> fallback) {
  return grid.empty() ? std::vector<double>(fallback.begin(), fallback.end()) : grid;
}

std::vector<double> to_canonical(std::vector<double> grid, const StableSpec& spec) {
  for (double& x : grid) x /= spec.gamma_scale;
  return grid;
}

int cmd_density(const Context& ctx, std::vector<OutputRow>& rows) {
  if (ctx.opt.x_grid.empty()) throw DomainError("x-grid", "density needs --x-grid");
  const Method requested = ctx.opt.method == "series"     ? Method::series
                           : ctx.opt.method == "integral" ? Method::integral
                                                          : Method::automatic;
  int code = kOk;
  for (const double x : ctx.opt.x_grid) {
    OutputRow row = make_row(ctx.spec.alpha, x, requested);
    try {
      EvalResult r;
      const double value = canonical_density_transfer(ctx.spec, x, [&](double u) {
        switch (requested) {
          case Method::series: r = series::as_eval(series::density_series(ctx.spec.alpha, u, ctx.series_tol)); break;
          case Method::integral: r = oscint::density_integral(ctx.spec.alpha, u, ctx.cfg); break;
          default: r = oscint::density_auto(ctx.spec.alpha, u, ctx.cfg); break;
        }
        return r.value;
      });
      fill(row, r);
      row.value = value;
      row.error_estimate = r.abs_error / ctx.spec.gamma_scale;
    } catch (const Error& e) {
      mark_error(row, e);
      code = kPartialFailure;
    }
    rows.push_back(std::move(row));
  }
  return code;
}

int cmd_tail(const Context& ctx, std::vector<OutputRow>& rows) {
  if (ctx.opt.x_grid.empty()) throw DomainError("x-grid", "tail needs --x-grid");
  const std::string& m = ctx.opt.method;
  int code = kOk;
  for (const double x : ctx.opt.x_grid) {
    const double u = x / ctx.spec.gamma_scale;
    OutputRow row = make_row(ctx.spec.alpha, x, m == "series" ? Method::series : m == "law" ? Method::law : Method::automatic);
    try {
      if (m == "law") {
        row.value = asymptotics::tail_prob_law(ctx.spec.alpha, u);
      } else {
        const EvalResult cdf = m == "series" ? series::as_eval(series::cdf_series(ctx.spec.alpha, u, ctx.series_tol))
                                             : oscint::cdf_auto(ctx.spec.alpha, u, ctx.cfg);
        fill(row, cdf);
        row.value = 1.0 - cdf.value;
      }
    } catch (const Error& e) {
      mark_error(row, e);
      code = kPartialFailure;
    }
    rows.push_back(std::move(row));
  }
  return code;
}

int cmd_laplace(const Context& ctx, std::vector<OutputRow>& rows) {
  if (ctx.opt.lambda_grid.empty()) throw DomainError("lambda-grid", "laplace needs --lambda-grid");
  const bool exact = ctx.opt.method != "laplace_numeric";
  const bool numeric = ctx.opt.method != "laplace_exact";
  int code = kOk;
  for (const double lam : ctx.opt.lambda_grid) {
    // E exp(-lam S_c) = E exp(-(lam gamma_scale) S).
    const double mu = lam * ctx.spec.gamma_scale;
    if (exact) {
      OutputRow row = make_row(ctx.spec.alpha, lam, Method::laplace_exact);
      try {
        row.value = laplace::laplace_exact(ctx.spec.alpha, mu);
        if (mu <= 0.5) row.diagnostics["expansion"] = laplace::small_lambda_expansion(ctx.spec.alpha, mu);
      } catch (const Error& e) {
        mark_error(row, e);
        code = kPartialFailure;
      }
      rows.push_back(std::move(row));
    }
    if (numeric) {
      OutputRow row = make_row(ctx.spec.alpha, lam, Method::laplace_numeric);
      try {
        fill(row, mu == 0.0 ? laplace::density_mass(ctx.spec.alpha, ctx.cfg)
                            : laplace::laplace_from_density(ctx.spec.alpha, mu, ctx.cfg));
      } catch (const Error& e) {
        mark_error(row, e);
        code = kPartialFailure;
      }
      rows.push_back(std::move(row));
    }
  }
  return code;
}

// Both Fourier-tail harness cases on the default grid.
struct HarnessCase {
  std::string name;
  asymptotics::FourierKind kind;
  double target_constant;
  asymptotics::AsymptoteFit fit;
};

std::vector<HarnessCase> run_harness(double alpha, const QuadConfig& cfg) {
  const auto k = special::asymptote_constants(alpha);
  const auto h1 = [alpha, k](double t) { return oscint::h_funcs(alpha, t).h1 / k.k1; };
  const auto h2 = [alpha, k](double t) { return oscint::h_funcs(alpha, t).h2 / k.k2; };
  std::vector<HarnessCase> out;
  out.push_back({"h1/k1 cosine", asymptotics::FourierKind::cosine, k.l1,
                 asymptotics::fourier_tail_estimate(h1, asymptotics::FourierKind::cosine, alpha,
                                                    defaults::kHarnessGrid, cfg)});
  out.push_back({"h2/k2 sine", asymptotics::FourierKind::sine, k.l2,
                 asymptotics::fourier_tail_estimate(h2, asymptotics::FourierKind::sine, alpha,
                                                    defaults::kHarnessGrid, cfg)});
  return out;
}

int cmd_asymptote(const Context& ctx, std::vector<OutputRow>& rows) {
  const double alpha = ctx.spec.alpha;
  const std::vector<double> grid = or_default(ctx.opt.x_grid, defaults::kTailRatioGrid);
  int code = kOk;
  try {
    const auto fit = asymptotics::density_tail_ratio(alpha, to_canonical(grid, ctx.spec), ctx.cfg);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      OutputRow row = make_row(alpha, grid[i], Method::integral, fit.values[i]);
      row.diagnostics = {{"quantity", "density_tail_ratio"},
                         {"rate_hat", fit.exponent_hat},
                         {"constant_hat", fit.constant_hat},
                         {"target_constant", special::canonical_constant(alpha)}};
      rows.push_back(std::move(row));
    }
  } catch (const Error& e) {
    OutputRow row = make_row(alpha, grid.back(), Method::integral);
    mark_error(row, e);
    rows.push_back(std::move(row));
    code = kPartialFailure;
  }
  try {
    for (const auto& hc : run_harness(alpha, ctx.cfg)) {
      for (std::size_t i = 0; i < hc.fit.x_grid.size(); ++i) {
        OutputRow row = make_row(alpha, hc.fit.x_grid[i], Method::integral, hc.fit.values[i]);
        row.diagnostics = {{"quantity", "fourier_tail " + hc.name},
                           {"exponent_hat", hc.fit.exponent_hat},
                           {"plain_exponent", hc.fit.plain_exponent},
                           {"target_exponent", -(alpha + 1.0)},
                           {"constant_hat", hc.fit.constant_hat},
                           {"target_constant", hc.target_constant},
                           {"residual", hc.fit.residuals[i]}};
        rows.push_back(std::move(row));
      }
    }
  } catch (const Error& e) {
    OutputRow row = make_row(alpha, defaults::kHarnessGrid.back(), Method::integral);
    mark_error(row, e);
    rows.push_back(std::move(row));
    code = kPartialFailure;
  }
  return code;
}

int cmd_mc(const Context& ctx, std::vector<OutputRow>& rows) {
  const std::vector<double> grid = or_default(ctx.opt.x_grid, defaults::kMcGrid);
  mc::McRun run;
  run.n_paths = ctx.opt.paths;
  run.n_steps = ctx.opt.steps;
  run.seed = ctx.opt.seed;
  const auto sample = mc::simulate_supremum(ctx.spec.alpha, run);
  int code = kOk;
  for (const double x : grid) {
    const double u = x / ctx.spec.gamma_scale;
    const auto [p, se] = mc::empirical_tail(sample, u);
    OutputRow row = make_row(ctx.spec.alpha, x, Method::mc, p, se);
    row.diagnostics = {{"paths", run.n_paths}, {"steps", run.n_steps}, {"seed", run.seed}};
    try {
      row.diagnostics["analytic"] = 1.0 - oscint::cdf_auto(ctx.spec.alpha, u, ctx.cfg).value;
      row.diagnostics["law"] = asymptotics::tail_prob_law(ctx.spec.alpha, u);
    } catch (const Error& e) {
      row.diagnostics["analytic_error"] = e.what();
      code = kPartialFailure;
    }
    rows.push_back(std::move(row));
  }
  return code;
}

int cmd_verify(const Context& ctx, std::vector<OutputRow>& rows) {
  const double alpha = ctx.spec.alpha;
  bool all_pass = true;
  const auto gate = [&](const std::string& name, double x, Method m, double statistic, double bound, bool pass) {
    OutputRow row = make_row(alpha, x, m, statistic);
    row.diagnostics = {{"gate", name}, {"pass", pass}};
    if (std::isfinite(bound)) row.diagnostics["bound"] = bound;
    rows.push_back(std::move(row));
    all_pass = all_pass && pass;
  };

  const double identity = asymptotics::certify_identity(alpha);
  gate("constant_identity", 0.0, Method::law, identity, defaults::kIdentityTol,
       std::abs(identity) < defaults::kIdentityTol);

  const std::vector<double> grid = or_default(ctx.opt.x_grid, defaults::kTailRatioGrid);
  try {
    const auto fit = asymptotics::density_tail_ratio(alpha, to_canonical(grid, ctx.spec), ctx.cfg);
    const bool monotone = asymptotics::approaches_one_monotonically(fit);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      gate("tail_ratio_monotone", grid[i], Method::integral, fit.values[i] - 1.0,
           std::numeric_limits<double>::quiet_NaN(), monotone);
    }
    const double last = std::abs(fit.values.back() - 1.0);
    gate("tail_ratio_bound", grid.back(), Method::integral, last, defaults::kTailRatioBound,
         last < defaults::kTailRatioBound);
  } catch (const Error& e) {
    OutputRow row = make_row(alpha, grid.back(), Method::integral);
    mark_error(row, e);
    row.diagnostics["gate"] = "tail_ratio";
    row.diagnostics["pass"] = false;
    rows.push_back(std::move(row));
    all_pass = false;
  }

  try {
    for (const auto& hc : run_harness(alpha, ctx.cfg)) {
      const double exp_err = hc.fit.exponent_hat + (alpha + 1.0);
      gate("harness_exponent " + hc.name, defaults::kHarnessGrid.back(), Method::integral, exp_err,
           defaults::kHarnessExponentTol, std::abs(exp_err) < defaults::kHarnessExponentTol);
      const double const_err = hc.fit.constant_hat / hc.target_constant - 1.0;
      gate("harness_constant " + hc.name, defaults::kHarnessGrid.back(), Method::integral, const_err,
           defaults::kHarnessConstantTol, std::abs(const_err) < defaults::kHarnessConstantTol);
    }
  } catch (const Error& e) {
    OutputRow row = make_row(alpha, defaults::kHarnessGrid.back(), Method::integral);
    mark_error(row, e);
    row.diagnostics["gate"] = "harness";
    row.diagnostics["pass"] = false;
    rows.push_back(std::move(row));
    all_pass = false;
  }

  std::size_t passed = 0;
  for (const auto& r : rows) passed += r.diagnostics.value("pass", false) ? 1 : 0;
  *ctx.err << "verify alpha=" << format_number(alpha) << ": " << passed << "/" << rows.size()
           << " gate rows pass\n";
  return all_pass ? kOk : kVerificationFailure;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

Json row_json(const OutputRow& row) {
  Json j;
  j["alpha"] = row.alpha;
  j["x_or_lambda"] = row.x_or_lambda;
  j["method"] = std::string(method_name(row.method));
  j["value"] = row.value ? Json(*row.value) : Json(nullptr);
  j["error_estimate"] = row.error_estimate ? Json(*row.error_estimate) : Json(nullptr);
  j["diagnostics"] = row.diagnostics;
  return j;
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<OutputRow>& rows) {
  os << "alpha,x_or_lambda,method,value,error_estimate,diagnostics\n";
  for (const auto& row : rows) {
    os << format_number(row.alpha) << ',' << format_number(row.x_or_lambda) << ',' << method_name(row.method) << ','
       << (row.value ? format_number(*row.value) : "") << ','
       << (row.error_estimate ? format_number(*row.error_estimate) : "") << ','
       << (row.diagnostics.empty() ? "" : csv_escape(row.diagnostics.dump())) << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<OutputRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) arr.push_back(row_json(row));
  os << arr.dump(2) << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Density, distribution and Laplace transform of the supremum of a spectrally positive stable process"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--alpha", opt.alpha, "Stable index in (1, 2)")->required();
    sub->add_option("--c", opt.c, "Levy density constant (default 1/Gamma(-alpha))");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", opt.out, "Write rows to this file instead of stdout");
    sub->add_option("--tol", opt.tol, "Series truncation and quadrature relative tolerance");
  };
  const auto add_x_grid = [&opt](CLI::App* sub, const std::string& help) {
    sub->add_option("--x-grid", opt.x_grid, help)->delimiter(',');
  };

  auto* density = app.add_subcommand("density", "Density s(x)");
  add_common(density);
  add_x_grid(density, "Comma-separated x values");
  density->add_option("--method", opt.method, "series, integral or auto")
      ->check(CLI::IsMember({"series", "integral", "auto"}));

  auto* tail = app.add_subcommand("tail", "Tail probability P(S1 > x)");
  add_common(tail);
  add_x_grid(tail, "Comma-separated x values");
  tail->add_option("--method", opt.method, "series, auto or law")->check(CLI::IsMember({"series", "auto", "law"}));

  auto* laplace_cmd = app.add_subcommand("laplace", "Laplace transform E exp(-lambda S1)");
  add_common(laplace_cmd);
  laplace_cmd->add_option("--lambda-grid", opt.lambda_grid, "Comma-separated lambda values")->delimiter(',');
  laplace_cmd->add_option("--method", opt.method, "laplace_exact, laplace_numeric or auto (both)")
      ->check(CLI::IsMember({"laplace_exact", "laplace_numeric", "auto"}));

  auto* asymptote = app.add_subcommand("asymptote", "Tail-ratio and Fourier-tail fits");
  add_common(asymptote);
  add_x_grid(asymptote, "Geometric x grid for the density tail ratio");

  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo tail of the grid supremum");
  add_common(mc_cmd);
  add_x_grid(mc_cmd, "Comma-separated x values");
  mc_cmd->add_option("--paths", opt.paths, "Number of paths")->check(CLI::PositiveNumber);
  mc_cmd->add_option("--steps", opt.steps, "Grid steps per path")->check(CLI::PositiveNumber);
  mc_cmd->add_option("--seed", opt.seed, "Base seed");

  auto* verify = app.add_subcommand("verify", "Run the verification gates; exit 3 if any fails");
  add_common(verify);
  add_x_grid(verify, "Geometric x grid for the density tail ratio");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Context ctx;
  ctx.err = &err;
  std::vector<OutputRow> rows;
  int code = kOk;
  try {
    ctx.spec = opt.c ? make_spec(opt.alpha, *opt.c) : canonical_spec(opt.alpha);
    if (opt.tol) {
      if (!(*opt.tol > 0.0 && *opt.tol < 1e-3)) throw DomainError("tol", "must lie in (0, 1e-3)");
      ctx.series_tol = *opt.tol;
      ctx.cfg.rel_tol = *opt.tol;
    }
    ctx.cfg.validate();
    ctx.opt = opt;
    if (*density) code = cmd_density(ctx, rows);
    if (*tail) code = cmd_tail(ctx, rows);
    if (*laplace_cmd) code = cmd_laplace(ctx, rows);
    if (*asymptote) code = cmd_asymptote(ctx, rows);
    if (*mc_cmd) code = cmd_mc(ctx, rows);
    if (*verify) code = cmd_verify(ctx, rows);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kPartialFailure;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!opt.out.empty()) {
    file.open(opt.out);
    if (!file) {
      err << "error: cannot open " << opt.out << " for writing\n";
      return kUsage;
    }
    sink = &file;
  }
  if (opt.format == "json") {
    write_json(*sink, rows);
  } else {
    write_csv(*sink, rows);
  }
  return code;
}

}  // namespace stablesup::cli

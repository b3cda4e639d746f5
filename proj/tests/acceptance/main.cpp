// Acceptance checks. Each criterion prints exactly one PASS or FAIL line;
// the exit status is 0 only when every requested criterion passed.
//
//   acceptance c1 [c2 ...]    run the named criteria
//   acceptance all            c1 .. c9 with the fast Monte Carlo settings

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "stablesup/asymptotics.hpp"
#include "stablesup/config.hpp"
#include "stablesup/laplace.hpp"
#include "stablesup/montecarlo.hpp"
#include "stablesup/oscint.hpp"
#include "stablesup/series.hpp"
#include "stablesup/special.hpp"
#include "stablesup_cli/cli.hpp"

using namespace stablesup;

namespace {

constexpr std::array<double, 3> kAlphas{1.2, 1.5, 1.8};

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

Verdict identity() {
  double worst = 0.0;
  double worst_alpha = 0.0;
  std::vector<double> grid;
  for (int k = 0; k <= 24; ++k) grid.push_back(1.01 + 0.04 * k);
  grid.push_back(1.99);
  for (double alpha : grid) {
    const double r = std::abs(asymptotics::certify_identity(alpha));
    if (r > worst) {
      worst = r;
      worst_alpha = alpha;
    }
  }
  return {worst < defaults::kIdentityTol,
          fmt("constant identity: max |residual| %.2e at alpha=%.2f over %zu indices (bound %.0e)", worst, worst_alpha,
              grid.size(), defaults::kIdentityTol)};
}

Verdict cross_method() {
  double worst = 0.0;
  std::string where;
  bool ok = true;
  for (double alpha : kAlphas) {
    const double hi = series::trusted_limit(alpha);
    const oscint::IntegralDensity integral(alpha);
    for (int i = 0; i < 20; ++i) {
      const double x = 0.1 * std::pow(hi / 0.1, i / 19.0);
      const double s = series::density_series(alpha, x).value;
      const double rel = std::abs(integral.density(x).value - s) / s;
      if (!(rel <= worst)) {
        worst = rel;
        where = fmt("alpha=%.1f x=%.4g", alpha, x);
      }
      ok = ok && rel < defaults::kCrossMethodTol;
    }
  }
  return {ok, fmt("series vs integral on 20 points in [0.1, x_trust] per alpha: max rel diff %.2e (%s), bound %.0e",
                  worst, where.c_str(), defaults::kCrossMethodTol)};
}

Verdict harness() {
  bool ok = true;
  std::ostringstream os;
  for (double alpha : kAlphas) {
    const auto k = special::asymptote_constants(alpha);
    const auto cosine = asymptotics::fourier_tail_estimate(
        [&](double t) { return oscint::h_funcs(alpha, t).h1 / k.k1; }, asymptotics::FourierKind::cosine, alpha,
        defaults::kHarnessGrid);
    const auto sine = asymptotics::fourier_tail_estimate(
        [&](double t) { return oscint::h_funcs(alpha, t).h2 / k.k2; }, asymptotics::FourierKind::sine, alpha,
        defaults::kHarnessGrid);
    const double target = -(alpha + 1.0);
    const double e1 = cosine.exponent_hat - target;
    const double e2 = sine.exponent_hat - target;
    const double r1 = cosine.constant_hat / k.l1 - 1.0;
    const double r2 = sine.constant_hat / k.l2 - 1.0;
    ok = ok && std::abs(e1) < defaults::kHarnessExponentTol && std::abs(e2) < defaults::kHarnessExponentTol &&
         std::abs(r1) < defaults::kHarnessConstantTol && std::abs(r2) < defaults::kHarnessConstantTol;
    os << fmt(" alpha=%.1f exp err %+.4f/%+.4f const err %+.4f/%+.4f (plain slope err %+.3f/%+.3f);", alpha, e1, e2,
              r1, r2, cosine.plain_exponent - target, sine.plain_exponent - target);
  }
  return {ok, "Fourier-tail harness on {8,16,32,64}:" + os.str()};
}

Verdict lemma_bound() {
  const std::array<double, 4> grid{10.0, 20.0, 40.0, 80.0};
  std::vector<double> b;
  for (double x : grid) b.push_back(std::pow(x, 3) * std::abs(oscint::i1_integral(1.5, x).value));
  const auto [lo, hi] = std::minmax_element(b.begin(), b.end());
  // Least-squares slope of log b against log x.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double lx = std::log(grid[i]);
    const double ly = std::log(b[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(grid.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double spread = *hi / *lo;
  return {spread < 10.0 && slope <= 0.0,
          fmt("x^3 |I1(x)| at alpha=1.5 on {10,20,40,80}: %.4g %.4g %.4g %.4g, max/min %.3f, log-log slope %+.3f", b[0],
              b[1], b[2], b[3], spread, slope)};
}

Verdict tail_ratio() {
  bool ok = true;
  std::ostringstream os;
  for (double alpha : kAlphas) {
    const auto fit = asymptotics::density_tail_ratio(alpha, defaults::kTailRatioGrid);
    const bool mono = asymptotics::approaches_one_monotonically(fit);
    const double last = std::abs(fit.values.back() - 1.0);
    ok = ok && mono && last < defaults::kTailRatioBound;
    os << fmt(" alpha=%.1f |ratio-1| = %.5f %.5f %.5f %.5f %s;", alpha, std::abs(fit.residuals[0]),
              std::abs(fit.residuals[1]), std::abs(fit.residuals[2]), last, mono ? "monotone" : "NOT monotone");
  }
  return {ok, fmt("density / c x^-(alpha+1) on {25,50,100,200}, bound %.2f at x=200:", defaults::kTailRatioBound) +
                  os.str()};
}

Verdict normalization() {
  bool ok = true;
  std::ostringstream os;
  for (double alpha : kAlphas) {
    const auto m = laplace::density_mass(alpha);
    ok = ok && std::abs(m.value - 1.0) < 1e-3;
    os << fmt(" alpha=%.1f mass-1 = %+.2e;", alpha, m.value - 1.0);
  }
  return {ok, "total mass with closed-form tail beyond x=200 (bound 1e-3):" + os.str()};
}

Verdict laplace_reconciliation() {
  bool ok = true;
  double worst = 0.0;
  std::ostringstream os;
  for (double alpha : kAlphas) {
    for (double lam : {0.5, 1.0, 2.0}) {
      const auto row = laplace::laplace_eval(alpha, lam);
      const double rel = row.abs_gap / row.exact;
      worst = std::max(worst, rel);
      ok = ok && rel < 1e-4;
    }
    const auto order = laplace::remainder_order(alpha, defaults::kRemainderGrid);
    ok = ok && std::abs(order.order - (1.0 + alpha)) < 0.1;
    os << fmt(" alpha=%.1f order %.4f (target %.1f, plain slope %.4f);", alpha, order.order, 1.0 + alpha,
              order.plain_slope);
  }
  return {ok, fmt("max rel gap %.2e at lambda in {0.5,1,2} (bound 1e-4); remainder order on {0.2,0.1,0.05,0.025}:",
                  worst) +
                  os.str()};
}

Verdict monte_carlo(std::size_t paths, std::size_t steps, double rel_slack, double se_slack, std::size_t laplace_draws) {
  const double alpha = 1.5;
  mc::McRun run;
  run.n_paths = paths;
  run.n_steps = steps;
  const auto sample = mc::simulate_supremum(alpha, run);
  bool ok = true;
  std::ostringstream os;
  for (double x : defaults::kMcGrid) {
    const double q = 1.0 - oscint::cdf_auto(alpha, x).value;
    const auto [p, se] = mc::empirical_tail(sample, x);
    const bool in = p >= q - rel_slack * q && p <= q + se_slack * se;
    ok = ok && in;
    os << fmt(" x=%g p=%.5f q=%.5f se=%.5f%s;", x, p, q, se, in ? "" : " OUT");
  }
  for (double lam : {0.5, 1.0}) {
    const auto chk = mc::laplace_check(alpha, lam, laplace_draws, run.seed);
    const double z = (chk.mean - chk.target) / chk.standard_error;
    ok = ok && std::abs(z) <= se_slack;
    os << fmt(" laplace lam=%g z=%+.2f;", lam, z);
  }
  return {ok, fmt("alpha=1.5, %zu paths x %zu steps, window [q-%.0f%%, q+%.0f SE]:", paths, steps, 100 * rel_slack,
                  se_slack) +
                  os.str()};
}

Verdict determinism() {
  std::vector<std::string> outputs;
  for (const char* threads : {"1", "4", "8", "1"}) {
    ::setenv("STABLESUP_THREADS", threads, 1);
    const std::vector<const char*> argv{"stablesup", "mc",     "--alpha", "1.5",   "--paths", "10000",
                                        "--steps",   "1000",   "--seed",  "42",    "--x-grid", "1,2,5"};
    std::ostringstream out;
    std::ostringstream err;
    if (cli::run(static_cast<int>(argv.size()), argv.data(), out, err) != cli::kOk) {
      return {false, "mc run failed: " + err.str()};
    }
    outputs.push_back(out.str());
  }
  ::unsetenv("STABLESUP_THREADS");
  const bool same = std::all_of(outputs.begin(), outputs.end(), [&](const std::string& o) { return o == outputs[0]; });
  return {same, fmt("mc output with STABLESUP_THREADS=1,4,8 and a repeat: %s (%zu bytes)",
                    same ? "byte-identical" : "DIFFERS", outputs[0].size())};
}

const std::map<std::string, std::function<Verdict()>>& criteria() {
  static const std::map<std::string, std::function<Verdict()>> table{
      {"c1", identity},
      {"c2", cross_method},
      {"c3", harness},
      {"c4", lemma_bound},
      {"c5", tail_ratio},
      {"c6", normalization},
      {"c7", laplace_reconciliation},
      {"c8", [] { return monte_carlo(10000, 1000, 0.2, 6.0, 100000); }},
      {"c8slow", [] { return monte_carlo(100000, 10000, 0.1, 3.0, 1000000); }},
      {"c9", determinism},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> names;
  for (int i = 1; i < argc; ++i) names.emplace_back(argv[i]);
  if (names.size() == 1 && names[0] == "all") names = {"c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9"};
  if (names.empty()) {
    std::fprintf(stderr, "usage: acceptance all | c1 .. c9 | c8slow\n");
    return 2;
  }
  bool all_pass = true;
  for (const auto& name : names) {
    const auto it = criteria().find(name);
    if (it == criteria().end()) {
      std::fprintf(stderr, "unknown criterion %s\n", name.c_str());
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = it->second();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s: %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str(), secs);
    std::fflush(stdout);
    all_pass = all_pass && v.pass;
  }
  return all_pass ? 0 : 1;
}

#include "stablesup/series.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include "stablesup/special.hpp"

namespace stablesup::series {
namespace {

constexpr int kMaxTerms = 1000000;
constexpr int kBelowRun = 3;
constexpr double kEps = std::numeric_limits<double>::epsilon();
// Beyond this argument the gamma factors of a_n leave the double range.
constexpr double kDirectLimit = 170.0;

enum class Kind { density, cdf };

struct Coeff {
  double value;  // valid when direct
  double log_abs;
  int sign;
  bool direct;
};

Coeff coefficient(double alpha, double eta, int n) {
  const double z1 = alpha * n - 1.0;
  const double z2 = eta + 1.0 - n;
  if (z1 < kDirectLimit && 1.0 - z2 < kDirectLimit) {
    const double v = special::recip_gamma(z1) * special::recip_gamma(z2);
    return {v, std::log(std::abs(v)), v > 0.0 ? 1 : (v < 0.0 ? -1 : 0), true};
  }
  const auto l1 = special::log_recip_gamma(z1);
  const auto l2 = special::log_recip_gamma(z2);
  return {std::numeric_limits<double>::quiet_NaN(), l1.log_abs + l2.log_abs, l1.sign * l2.sign, false};
}

std::string format_arg(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

SeriesValue evaluate(double alpha, double x, double tol, Kind kind) {
  require_index(alpha);
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("x", "must be positive and finite");
  if (!(tol > 0.0 && tol < 1e-3)) throw DomainError("tol", "must lie in (0, 1e-3)");

  const double eta = 1.0 / alpha;
  const double log_x = std::log(x);
  const double shift = kind == Kind::density ? 2.0 : 1.0;

  // Bound on any plausible result, used to stop early once cancellation is
  // certain to exceed the gate: F <= 1, and s(x) is dominated by its first term.
  const double first = coefficient(alpha, eta, 1).value * std::pow(x, alpha - shift);
  const double plausible = kind == Kind::cdf ? 1.0 : std::max(1.0, std::abs(first));
  const double give_up = plausible * std::pow(10.0, defaults::kCancellationGate + 2.0);

  CompensatedSum acc;
  SeriesDiag diag;
  double prev_abs = std::numeric_limits<double>::infinity();
  int below = 0;
  int n = 1;
  for (; n <= kMaxTerms; ++n) {
    const Coeff c = coefficient(alpha, eta, n);
    const double power = alpha * n - shift;
    double term = 0.0;
    if (c.sign != 0) {
      if (c.direct) term = c.value * std::pow(x, power);
      if (!c.direct || !std::isfinite(term) || (term == 0.0 && c.value != 0.0)) {
        term = c.sign * std::exp(c.log_abs + power * log_x);
      }
      if (kind == Kind::cdf) term /= alpha * n - 1.0;
    }
    acc.add(term);
    const double mag = std::abs(term);
    const double z1 = alpha * n - 1.0;
    diag.rounding_error +=
        mag * kEps * (4.0 + std::abs(power * log_x) + 2.0 * std::abs(z1) * std::log(2.0 + std::abs(z1)));
    diag.max_term = std::max(diag.max_term, mag);
    if (!std::isfinite(mag) || diag.max_term > give_up) break;

    const double partial = std::abs(acc.value());
    below = (mag < tol * partial && (mag < prev_abs || mag == 0.0)) ? below + 1 : 0;
    prev_abs = mag;
    if (below >= kBelowRun) {
      diag.converged = true;
      break;
    }
  }

  const double value = acc.value();
  diag.n_terms = std::min(n, kMaxTerms);
  diag.cancellation_digits = std::log10(diag.max_term / std::max(std::abs(value), 1e-300));
  if (!diag.converged) {
    throw PrecisionLossError("series: cancellation exceeds the working precision at x = " + format_arg(x),
                             diag);
  }
  if (diag.cancellation_digits > defaults::kCancellationGate) {
    diag.converged = false;
    throw PrecisionLossError("series: " + std::to_string(diag.cancellation_digits) +
                                 " digits of cancellation at x = " + format_arg(x),
                             diag);
  }
  return {value, diag};
}

}  // namespace

double series_coeff(double alpha, int n) {
  require_index(alpha);
  if (n < 1) throw DomainError("n", "series index starts at 1");
  const Coeff c = coefficient(alpha, 1.0 / alpha, n);
  return c.direct ? c.value : c.sign * std::exp(c.log_abs);
}

SeriesValue density_series(double alpha, double x, double tol) { return evaluate(alpha, x, tol, Kind::density); }

SeriesValue cdf_series(double alpha, double x, double tol) { return evaluate(alpha, x, tol, Kind::cdf); }

EvalResult as_eval(const SeriesValue& sv) {
  const double err = sv.diag.rounding_error + defaults::kSeriesTol * std::abs(sv.value);
  return {sv.value,
          err,
          Method::series,
          {{"n_terms", sv.diag.n_terms}, {"cancellation_digits", sv.diag.cancellation_digits}}};
}

double trusted_limit(double alpha) {
  require_index(alpha);
  static std::mutex mutex;
  static std::map<double, double> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(alpha); it != memo.end()) return it->second;
  }

  const auto within_budget = [alpha](double x) {
    try {
      return density_series(alpha, x).diag.cancellation_digits <= defaults::kAutoSwitchDigits;
    } catch (const PrecisionLossError&) {
      return false;
    }
  };
  double good = 0.25;
  double bad = good;
  while (bad < 100.0 && within_budget(bad)) {
    good = bad;
    bad *= 1.25;
  }
  for (int i = 0; i < 50 && bad - good > 1e-9 * good; ++i) {
    const double mid = 0.5 * (good + bad);
    (within_budget(mid) ? good : bad) = mid;
  }

  std::lock_guard lock(mutex);
  memo.emplace(alpha, good);
  return good;
}

}  // namespace stablesup::series

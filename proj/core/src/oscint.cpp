#include "stablesup/oscint.hpp"

#include <cmath>
#include <algorithm>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "stablesup/errors.hpp"
#include "stablesup/quadrature.hpp"
#include "stablesup/series.hpp"

namespace stablesup::oscint {
namespace {

constexpr double kPi = std::numbers::pi;
// exp(-40) ~ 4e-18: the inner integrand is negligible beyond a z t^alpha = 40.
constexpr double kDecayCut = 40.0;
// Phase (in radians of b z t^alpha, or units of a z t^alpha) spanned by one inner panel.
constexpr double kPanelPhase = 8.0;

double nan() { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace

namespace detail {

EulerEstimate euler_partial_sums(std::span<const double> partial_sums) {
  if (partial_sums.empty()) throw DomainError("partial_sums", "need at least one partial sum");
  std::vector<double> level(partial_sums.begin(), partial_sums.end());
  double correction = 0.0;
  while (level.size() > 1) {
    if (level.size() == 2) correction = 0.5 * std::abs(level[1] - level[0]);
    for (std::size_t i = 0; i + 1 < level.size(); ++i) level[i] = 0.5 * (level[i] + level[i + 1]);
    level.pop_back();
  }
  return {level.front(), correction};
}

HalfPeriodSum half_period_integral(const std::function<double(double)>& f, double x, const QuadConfig& cfg,
                                   TailMode mode, const std::function<double(double)>& envelope,
                                   const std::function<double(double)>& tail_bound) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("x", "must be positive and finite");
  cfg.validate();
  const double period = kPi / x;
  const double seg_abs = 0.1 * cfg.abs_tol;
  const double seg_rel = 1e-2 * cfg.rel_tol;

  double seg_error = 0.0;
  // cumulative[k] = sum of the first k segments.
  std::vector<double> cumulative{0.0};
  std::vector<double> errors;
  const auto extend_to = [&](int count) {
    while (static_cast<int>(cumulative.size()) <= count) {
      const int k = static_cast<int>(cumulative.size()) - 1;
      const auto r = quad::adaptive_gk(f, k * period, (k + 1) * period, seg_abs, seg_rel);
      seg_error += r.abs_error;
      errors.push_back(std::max({r.abs_error, seg_abs, seg_rel * std::abs(r.value)}));
      cumulative.push_back(cumulative.back() + r.value);
    }
  };

  if (mode == TailMode::truncate) {
    if (!envelope) throw DomainError("envelope", "truncation needs an envelope");
    int k = 0;
    while (true) {
      const double t = k * period;
      if ((k > 0 && envelope(t) <= 1e-2 * cfg.abs_tol) || t >= cfg.outer_cutoff) break;
      if (k >= cfg.max_half_periods) {
        throw QuadratureError("half-period truncation: envelope not small after max_half_periods segments",
                              envelope(t));
      }
      extend_to(++k);
    }
    const double bound = tail_bound ? tail_bound(k * period) : 0.0;
    return {cumulative[k], seg_error + bound, k};
  }

  const int depth = cfg.accel_depth;
  int cut = 1;
  int previous_cut = 1;
  double previous = nan();
  double last_gap = std::numeric_limits<double>::infinity();
  while (true) {
    if (cut + depth > cfg.max_half_periods) {
      throw QuadratureError("half-period acceleration did not converge within max_half_periods", last_gap);
    }
    extend_to(cut + depth);
    const auto est = euler_partial_sums(std::span<const double>(cumulative).subspan(cut, depth + 1));
    // The averaged estimate cannot be sharper than the accuracy each segment
    // was integrated to. Two successive estimates also differ by the errors
    // of every segment between their windows, so the target never drops
    // below either floor.
    double noise = 0.0;
    for (int k = cut - 1; k < cut + depth; ++k) noise = std::max(noise, errors[k]);
    double drift = 0.0;
    for (int k = previous_cut - 1; k < cut + depth; ++k) drift += errors[k];
    const double tol = std::max({cfg.abs_tol, cfg.rel_tol * std::abs(est.value), 8.0 * noise, 2.0 * drift});
    if (!std::isnan(previous)) {
      last_gap = std::abs(est.value - previous);
      if (last_gap <= tol && est.correction <= tol) {
        return {est.value, last_gap + est.correction + seg_error, static_cast<int>(cumulative.size()) - 1};
      }
    }
    previous = est.value;
    previous_cut = cut;
    cut = std::max(cut + 2, cut * 3 / 2);
  }
}

}  // namespace detail

IntegralDensity::IntegralDensity(double alpha, QuadConfig cfg)
    : alpha_(alpha), trig_(special::trig_constants(alpha)), cfg_(cfg), gamma_eta_(std::tgamma(1.0 / alpha)) {
  cfg_.validate();
}

GValues IntegralDensity::g(double t, int nodes) const {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("t", "must be non-negative and finite");
  if (t == 0.0) return {0.0, 0.0};

  const double big_t = std::pow(t, alpha_);
  const double beta = trig_.beta;
  double z_end = 1.0;
  if (trig_.a * big_t > kDecayCut) z_end = std::min(1.0, kDecayCut / (trig_.a * big_t));
  if (z_end > 0.5) z_end = 1.0;
  const int panels = std::max(1, static_cast<int>(std::ceil(z_end * big_t / kPanelPhase)));
  const double width = z_end / panels;

  const auto legendre = quad::cached_gauss_legendre(nodes);
  const auto jacobi = quad::cached_gauss_jacobi(nodes, -beta, 0.0);
  const std::complex<double> rate(-trig_.a * big_t, trig_.b * big_t);

  std::complex<double> sum(0.0, 0.0);
  for (int p = 0; p < panels; ++p) {
    const double z0 = p * width;
    if (z_end == 1.0 && p == panels - 1) {
      // (1 - z)^-beta absorbed into the Jacobi weight on the last panel.
      const double half = 0.5 * (1.0 - z0);
      const double scale = std::pow(half, 1.0 - beta);
      for (int i = 0; i < nodes; ++i) {
        const double z = z0 + half * (1.0 + jacobi->nodes[i]);
        sum += scale * jacobi->weights[i] * std::exp(rate * z);
      }
    } else {
      const double half = 0.5 * width;
      const double mid = z0 + half;
      for (int i = 0; i < nodes; ++i) {
        const double z = mid + half * legendre->nodes[i];
        sum += half * legendre->weights[i] * std::pow(1.0 - z, -beta) * std::exp(rate * z);
      }
    }
  }
  return {t * sum.imag(), t * sum.real()};
}

GValues IntegralDensity::g_checked(double t) const {
  int nodes = cfg_.jacobi_nodes;
  GValues prev = g(t, nodes);
  double gap = 0.0;
  for (int level = 0; level < 2; ++level) {
    nodes *= 2;
    const GValues cur = g(t, nodes);
    gap = std::hypot(cur.g1 - prev.g1, cur.g2 - prev.g2);
    const double mag = std::hypot(cur.g1, cur.g2);
    if (gap <= std::max(cfg_.abs_tol, cfg_.rel_tol * mag)) return cur;
    prev = cur;
  }
  throw QuadratureError("g_funcs: node doubling did not converge", gap);
}

EvalResult IntegralDensity::i1(double x) const {
  const int nodes = cfg_.jacobi_nodes;
  const auto integrand = [this, x, nodes](double t) {
    const GValues gv = g(t, nodes);
    return gv.g1 * std::cos(t * x) + gv.g2 * std::sin(t * x);
  };
  const auto r = detail::half_period_integral(integrand, x, cfg_, detail::TailMode::accelerate);
  return {r.value, r.abs_error, Method::integral, {{"segments", r.segments}}};
}

EvalResult IntegralDensity::i2(double x) const {
  const double a = trig_.a;
  const double b = trig_.b;
  const double alpha = alpha_;
  const auto integrand = [=](double t) {
    const double ta = std::pow(t, alpha);
    return std::exp(-a * ta) * std::cos(b * ta + t * x);
  };
  const auto envelope = [=](double t) { return std::exp(-a * std::pow(t, alpha)); };
  // int_t^inf exp(-a s^alpha) ds <= exp(-a t^alpha) / (a alpha t^(alpha-1))
  const auto tail = [=](double t) {
    return t > 0.0 ? std::exp(-a * std::pow(t, alpha)) / (a * alpha * std::pow(t, alpha - 1.0))
                   : std::numeric_limits<double>::infinity();
  };
  const auto r = detail::half_period_integral(integrand, x, cfg_, detail::TailMode::truncate, envelope, tail);
  return {r.value, r.abs_error, Method::integral, {{"segments", r.segments}}};
}

EvalResult IntegralDensity::density(double x) const {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("x", "must be positive and finite");
  const EvalResult r1 = i1(x);
  const EvalResult r2 = i2(x);
  const double w1 = 1.0 / (kPi * gamma_eta_);
  const double w2 = 1.0 / kPi;
  return {w1 * r1.value + w2 * r2.value,
          w1 * r1.abs_error + w2 * r2.abs_error,
          Method::integral,
          {{"i1", r1.value}, {"i2", r2.value}, {"segments", r1.diagnostics.at("segments")}}};
}

GValues g_funcs(double alpha, double t, const QuadConfig& cfg) { return IntegralDensity(alpha, cfg).g_checked(t); }

HValues h_funcs(double alpha, double t) {
  if (!(t >= 0.0)) throw DomainError("t", "must be non-negative");
  const auto tc = special::trig_constants(alpha);
  const double ta = std::pow(t, alpha);
  const double env = std::exp(-tc.a * ta);
  return {env * std::cos(tc.b * ta), -env * std::sin(tc.b * ta)};
}

EvalResult i1_integral(double alpha, double x, const QuadConfig& cfg) { return IntegralDensity(alpha, cfg).i1(x); }

EvalResult i2_integral(double alpha, double x, const QuadConfig& cfg) { return IntegralDensity(alpha, cfg).i2(x); }

EvalResult density_integral(double alpha, double x, const QuadConfig& cfg) {
  return IntegralDensity(alpha, cfg).density(x);
}

EvalResult density_auto(double alpha, double x, const QuadConfig& cfg) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("x", "must be positive and finite");
  if (x <= series::trusted_limit(alpha)) return series::as_eval(series::density_series(alpha, x));
  return density_integral(alpha, x, cfg);
}

EvalResult cdf_auto(double alpha, double x, const QuadConfig& cfg) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("x", "must be positive and finite");
  const double limit = series::trusted_limit(alpha);
  if (x <= limit) return series::as_eval(series::cdf_series(alpha, x));

  const EvalResult base = series::as_eval(series::cdf_series(alpha, limit));
  const IntegralDensity density(alpha, cfg);
  double worst_rel = 0.0;
  const auto integrand = [&](double u) {
    const EvalResult r = density.density(u);
    worst_rel = std::max(worst_rel, r.rel_error());
    return r.value;
  };
  const auto tail = quad::geometric_gk(integrand, limit, x, 1e-13, 1e-10);
  return {base.value + tail.value,
          base.abs_error + tail.abs_error + worst_rel * std::abs(tail.value),
          Method::automatic,
          {{"trusted_limit", limit}}};
}

}  // namespace stablesup::oscint

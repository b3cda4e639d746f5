#include "stablesup/laplace.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "stablesup/errors.hpp"
#include "stablesup/oscint.hpp"
#include "stablesup/quadrature.hpp"
#include "stablesup/series.hpp"
#include "stablesup/special.hpp"

namespace stablesup::laplace {
namespace {

constexpr double kExpansionMax = 0.5;
constexpr double kQuadAbs = 1e-12;
constexpr double kQuadRel = 1e-9;

void require_lambda(double lam) {
  if (!(lam >= 0.0) || !std::isfinite(lam)) throw DomainError("lam", "must be non-negative and finite");
}

EvalResult transform(double alpha, double lam, const QuadConfig& cfg) {
  require_index(alpha);
  require_lambda(lam);
  const double x_trust = series::trusted_limit(alpha);
  const double x_far = std::max(defaults::kTailStart, 2.0 * x_trust);

  // Near zero s(x) ~ a_1 x^(alpha-2); with x = x_trust v^p, p = 1/(alpha-1), the
  // Jacobian cancels that power and the integrand in v is bounded.
  const double p = 1.0 / (alpha - 1.0);
  double series_err = 0.0;
  const auto near = [&](double v) {
    if (v <= 0.0) return x_trust * p * series::series_coeff(alpha, 1) * std::pow(x_trust, alpha - 2.0);
    const double x = x_trust * std::pow(v, p);
    const auto sv = series::density_series(alpha, x);
    series_err = std::max(series_err, sv.diag.max_term * 1e-15 / std::max(std::abs(sv.value), 1e-300));
    return std::exp(-lam * x) * sv.value * x_trust * p * std::pow(v, p - 1.0);
  };
  const auto inner = quad::adaptive_gk(near, 0.0, 1.0, kQuadAbs, kQuadRel);

  const oscint::IntegralDensity density(alpha, cfg);
  double density_err = 0.0;
  const auto far = [&](double x) {
    const double damp = std::exp(-lam * x);
    if (damp == 0.0) return 0.0;
    const EvalResult r = density.density(x);
    density_err = std::max(density_err, r.rel_error());
    return damp * r.value;
  };
  const auto outer = quad::geometric_gk(far, x_trust, x_far, kQuadAbs, kQuadRel);

  const auto consts = special::asymptote_constants(alpha);
  const double remainder = std::exp(-lam * x_far) * consts.c_canonical / alpha * std::pow(x_far, -alpha);

  const double value = inner.value + outer.value + remainder;
  const double error = inner.abs_error + outer.abs_error + series_err * std::abs(inner.value) +
                       density_err * std::abs(outer.value) + remainder;
  return {value,
          error,
          Method::laplace_numeric,
          {{"near", inner.value}, {"far", outer.value}, {"remainder", remainder}, {"x_trust", x_trust}}};
}

}  // namespace

double laplace_exact(double alpha, double lam) {
  require_index(alpha);
  require_lambda(lam);
  if (lam == 0.0) return 1.0;
  const double u = std::pow(lam, alpha);
  if (u > kMaxExponent) throw RangeError("laplace_exact: lam^alpha exceeds " + std::to_string(kMaxExponent));
  const double eta = 1.0 / alpha;
  return special::upper_inc_gamma_scaled(eta, u) / std::tgamma(eta);
}

EvalResult laplace_from_density(double alpha, double lam, const QuadConfig& cfg) {
  if (!(lam > 0.0)) throw DomainError("lam", "must be positive");
  return transform(alpha, lam, cfg);
}

EvalResult density_mass(double alpha, const QuadConfig& cfg) { return transform(alpha, 0.0, cfg); }

double small_lambda_expansion(double alpha, double lam) {
  require_index(alpha);
  if (!(lam >= 0.0 && lam <= kExpansionMax)) throw DomainError("lam", "expansion needs 0 <= lam <= 0.5");
  return 1.0 - alpha * lam / std::tgamma(1.0 / alpha) + std::pow(lam, alpha);
}

LaplaceEval laplace_eval(double alpha, double lam, const QuadConfig& cfg) {
  const double exact = laplace_exact(alpha, lam);
  const double numeric = lam == 0.0 ? density_mass(alpha, cfg).value : laplace_from_density(alpha, lam, cfg).value;
  std::optional<double> expansion;
  if (lam <= kExpansionMax) expansion = small_lambda_expansion(alpha, lam);
  return {lam, exact, numeric, expansion, std::abs(exact - numeric)};
}

RemainderOrder remainder_order(double alpha, std::span<const double> lambdas) {
  require_index(alpha);
  if (lambdas.size() != 4) throw FitError("remainder_order: needs exactly four lambdas");
  RemainderOrder out{};
  Eigen::Matrix4d design;
  Eigen::Vector4d rhs;
  for (std::size_t i = 0; i < 4; ++i) {
    const double lam = lambdas[i];
    if (!(lam > 0.0 && lam <= kExpansionMax)) throw DomainError("lambdas", "each must lie in (0, 0.5]");
    const double r = std::abs(laplace_exact(alpha, lam) - small_lambda_expansion(alpha, lam));
    if (!(r > 0.0)) throw FitError("remainder_order: remainder vanished at a grid point");
    const double mu = std::pow(lam, alpha - 1.0);
    design.row(static_cast<Eigen::Index>(i)) << 1.0, std::log(lam), mu, mu * mu;
    rhs(static_cast<Eigen::Index>(i)) = std::log(r);
    out.lambdas.push_back(lam);
    out.remainders.push_back(r);
  }
  const auto lu = design.fullPivLu();
  if (!lu.isInvertible()) throw FitError("remainder_order: lambdas must be distinct");
  const Eigen::Vector4d coef = lu.solve(rhs);
  out.log_constant = coef(0);
  out.order = coef(1);

  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    mx += std::log(out.lambdas[i]) / 4.0;
    my += std::log(out.remainders[i]) / 4.0;
  }
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double dx = std::log(out.lambdas[i]) - mx;
    sxy += dx * (std::log(out.remainders[i]) - my);
    sxx += dx * dx;
  }
  out.plain_slope = sxy / sxx;
  return out;
}

double power_coefficient(double alpha, double lam) {
  require_index(alpha);
  if (!(lam > 0.0 && lam <= kExpansionMax)) throw DomainError("lam", "must lie in (0, 0.5]");
  const double linear = 1.0 - alpha * lam / std::tgamma(1.0 / alpha);
  return (laplace_exact(alpha, lam) - linear) / std::pow(lam, alpha);
}

}  // namespace stablesup::laplace

#include "stablesup/asymptotics.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>

#include "stablesup/errors.hpp"
#include "stablesup/oscint.hpp"
#include "stablesup/special.hpp"

namespace stablesup::asymptotics {
namespace {

// Least squares on the columns of `design`; QR with column pivoting.
Eigen::VectorXd least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& rhs) {
  const auto qr = design.colPivHouseholderQr();
  if (qr.rank() < design.cols()) throw FitError("least squares: design matrix is rank deficient");
  return qr.solve(rhs);
}

double plain_slope(std::span<const double> xs, std::span<const double> ys) {
  const auto n = static_cast<Eigen::Index>(xs.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = std::log(xs[static_cast<std::size_t>(i)]);
    rhs(i) = std::log(std::abs(ys[static_cast<std::size_t>(i)]));
  }
  return least_squares(design, rhs)(1);
}

}  // namespace

void require_geometric_grid(std::span<const double> x_grid, std::size_t min_points) {
  if (x_grid.size() < min_points) {
    throw DomainError("x_grid", "needs at least " + std::to_string(min_points) + " points");
  }
  if (!(x_grid[0] > 0.0)) throw DomainError("x_grid", "points must be positive");
  const double ratio = x_grid[1] / x_grid[0];
  if (!(ratio > 1.0)) throw DomainError("x_grid", "must be strictly increasing");
  for (std::size_t i = 1; i < x_grid.size(); ++i) {
    const double r = x_grid[i] / x_grid[i - 1];
    if (!(std::abs(r - ratio) <= 1e-9 * ratio)) throw DomainError("x_grid", "must be geometric");
  }
}

double tail_density_law(double alpha, double x) {
  require_index(alpha);
  if (!(x > 0.0)) throw DomainError("x", "must be positive");
  return special::canonical_constant(alpha) * std::pow(x, -(alpha + 1.0));
}

double tail_prob_law(double alpha, double x) {
  require_index(alpha);
  if (!(x > 0.0)) throw DomainError("x", "must be positive");
  return special::canonical_constant(alpha) / alpha * std::pow(x, -alpha);
}

AsymptoteFit fourier_tail_estimate(const std::function<double(double)>& h, FourierKind kind, double alpha,
                                   std::span<const double> x_grid, const QuadConfig& cfg) {
  require_index(alpha);
  require_geometric_grid(x_grid, 4);
  AsymptoteFit fit;
  fit.x_grid.assign(x_grid.begin(), x_grid.end());
  for (const double x : x_grid) {
    const auto integrand = [&h, kind, x](double t) {
      return h(t) * (kind == FourierKind::cosine ? std::cos(t * x) : std::sin(t * x));
    };
    const auto r = oscint::detail::half_period_integral(integrand, x, cfg, oscint::detail::TailMode::accelerate);
    fit.values.push_back(r.value);
  }
  const bool positive = fit.values.front() > 0.0;
  for (const double v : fit.values) {
    if (v == 0.0 || (v > 0.0) != positive) throw FitError("fourier_tail_estimate: T(x) changes sign on the grid");
  }

  const auto n = static_cast<Eigen::Index>(x_grid.size());
  Eigen::MatrixXd log_design(n, 3);
  Eigen::VectorXd log_rhs(n);
  Eigen::MatrixXd lin_design(n, 2);
  Eigen::VectorXd lin_rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = x_grid[static_cast<std::size_t>(i)];
    const double t = fit.values[static_cast<std::size_t>(i)];
    const double correction = std::pow(x, -alpha);
    log_design.row(i) << 1.0, std::log(x), correction;
    log_rhs(i) = std::log(std::abs(t));
    lin_design.row(i) << 1.0, correction;
    lin_rhs(i) = t * std::pow(x, alpha + 1.0);
  }
  fit.exponent_hat = least_squares(log_design, log_rhs)(1);
  const Eigen::VectorXd lin = least_squares(lin_design, lin_rhs);
  fit.constant_hat = lin(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double model = lin(0) + lin(1) * lin_design(i, 1);
    fit.residuals.push_back(lin_rhs(i) / model - 1.0);
  }
  fit.plain_exponent = plain_slope(x_grid, fit.values);
  return fit;
}

double certify_identity(double alpha) {
  const auto k = special::asymptote_constants(alpha);
  return (k.k1 * k.l1 + k.k2 * k.l2) / std::numbers::pi - 1.0 / special::gamma_neg_index(alpha);
}

AsymptoteFit density_tail_ratio(double alpha, std::span<const double> x_grid, const QuadConfig& cfg) {
  require_index(alpha);
  require_geometric_grid(x_grid, 3);
  const oscint::IntegralDensity density(alpha, cfg);
  AsymptoteFit fit;
  fit.x_grid.assign(x_grid.begin(), x_grid.end());
  for (const double x : x_grid) {
    const double ratio = density.density(x).value / tail_density_law(alpha, x);
    fit.values.push_back(ratio);
    fit.residuals.push_back(ratio - 1.0);
  }

  // Rate from the tail half of the grid only; the first points are pre-asymptotic.
  const std::size_t n = x_grid.size();
  const std::size_t take = std::max<std::size_t>(2, (n + 1) / 2);
  const std::span<const double> xs = x_grid.subspan(n - take);
  const std::span<const double> dev(fit.residuals.data() + (n - take), take);
  bool all_nonzero = true;
  for (const double d : dev) all_nonzero = all_nonzero && d != 0.0;
  fit.exponent_hat = all_nonzero ? plain_slope(xs, dev) : std::numeric_limits<double>::quiet_NaN();

  const double c = special::canonical_constant(alpha);
  const double q_last = c * fit.values[n - 1];
  const double q_prev = c * fit.values[n - 2];
  const double growth = std::pow(x_grid[n - 1] / x_grid[n - 2], -fit.exponent_hat);
  fit.constant_hat = std::isfinite(growth) && growth != 1.0 ? (growth * q_last - q_prev) / (growth - 1.0) : q_last;
  fit.plain_exponent = plain_slope(x_grid, fit.values) - (alpha + 1.0);
  return fit;
}

bool approaches_one_monotonically(const AsymptoteFit& ratio_fit) {
  for (std::size_t i = 1; i < ratio_fit.values.size(); ++i) {
    if (!(std::abs(ratio_fit.values[i] - 1.0) < std::abs(ratio_fit.values[i - 1] - 1.0))) return false;
  }
  return true;
}

}  // namespace stablesup::asymptotics

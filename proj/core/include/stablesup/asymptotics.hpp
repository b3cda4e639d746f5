#pragma once

// Tail laws of S1 and numerical checks of the constants behind them.
//
//   s(x) ~ c x^-(alpha+1),   P(S1 > x) ~ (c/alpha) x^-alpha,   c = 1/Gamma(-alpha).
//
// The density constant arises from the Fourier-tail theorem: if h is C^3 on
// (0, inf) with h'''(t) ~ t^(alpha-3) at 0 and suitable decay, then
//   int_0^inf h(t) cos(tx) dt ~ l1 x^-(alpha+1),  int_0^inf h(t) sin(tx) dt ~ l2 x^-(alpha+1).
// Applied to h1/k1 and h2/k2 this gives (k1 l1 + k2 l2)/pi, which equals c.

#include <functional>
#include <span>
#include <vector>

#include "stablesup/config.hpp"

namespace stablesup::asymptotics {

/// c x^-(alpha+1) with the canonical c.
double tail_density_law(double alpha, double x);

/// (c / alpha) x^-alpha with the canonical c.
double tail_prob_law(double alpha, double x);

enum class FourierKind { cosine, sine };

struct AsymptoteFit {
  double exponent_hat = 0.0;
  double constant_hat = 0.0;
  std::vector<double> x_grid;
  std::vector<double> values;
  /// Relative deviation of each value from the fitted model (or from the
  /// target, for ratio fits).
  std::vector<double> residuals;
  /// Ordinary least-squares slope of log|value| against log x, kept for
  /// comparison with the corrected estimate.
  double plain_exponent = 0.0;
};

/// T(x) = int_0^inf h(t) {cos, sin}(tx) dt on a geometric grid (>= 4 points).
///
/// Pre-asymptotic terms of relative size x^-alpha bias a plain log-log fit
/// badly on a grid as short as {8, ..., 64}, so both estimates carry that
/// correction explicitly:
///   exponent_hat  from  log T = a0 + p log x + d x^-alpha,
///   constant_hat  from  T x^(alpha+1) = C + D x^-alpha.
/// Throws FitError when T changes sign on the grid.
AsymptoteFit fourier_tail_estimate(const std::function<double(double)>& h, FourierKind kind, double alpha,
                                   std::span<const double> x_grid, const QuadConfig& cfg = {});

/// (k1 l1 + k2 l2)/pi - 1/Gamma(-alpha).
double certify_identity(double alpha);

/// Ratios s(x) / (c x^-(alpha+1)) from the integral representation.
///
/// values = ratios, residuals = ratio - 1. exponent_hat is the slope of
/// log|ratio - 1| over the last ceil(n/2) grid points (the convergence rate),
/// constant_hat extrapolates x^(alpha+1) s(x) from the last two points at
/// that rate.
AsymptoteFit density_tail_ratio(double alpha, std::span<const double> x_grid, const QuadConfig& cfg = {});

/// True when |values[i] - 1| is strictly decreasing along the grid.
bool approaches_one_monotonically(const AsymptoteFit& ratio_fit);

/// Requires a strictly increasing geometric grid with at least `min_points`
/// points (ratio constant to 1e-9); throws DomainError otherwise.
void require_geometric_grid(std::span<const double> x_grid, std::size_t min_points);

}  // namespace stablesup::asymptotics

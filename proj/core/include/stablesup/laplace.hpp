#pragma once

// Laplace transform of S1 under the canonical normalization,
//
//   E exp(-lambda S1) = (alpha / Gamma(1/alpha)) exp(lambda^alpha) int_lambda^inf exp(-y^alpha) dy
//                     = exp(u) Gamma(eta, u) / Gamma(eta),   u = lambda^alpha, eta = 1/alpha,
//
// the numerical transform of the computed density, and the small-lambda
// expansion 1 - alpha lambda / Gamma(1/alpha) + lambda^alpha + O(lambda^(1+alpha)).

#include <optional>
#include <span>
#include <vector>

#include "stablesup/config.hpp"
#include "stablesup/eval.hpp"

namespace stablesup::laplace {

/// Largest lambda^alpha accepted by laplace_exact.
inline constexpr double kMaxExponent = 700.0;

/// Closed form through the scaled upper incomplete gamma function, which
/// never forms exp(lambda^alpha) and the vanishing integral separately.
/// Throws DomainError for lam < 0 and RangeError once lam^alpha > kMaxExponent.
double laplace_exact(double alpha, double lam);

/// int_0^inf exp(-lam x) s(x) dx from the automatic density: the series on
/// [0, x_trust] (after x = x_trust v^(1/(alpha-1)), which removes the
/// x^(alpha-2) singularity), the integral representation on
/// [x_trust, defaults::kTailStart], and exp(-lam X) (c/alpha) X^-alpha for the rest.
/// The remainder term is also counted in the error estimate.
EvalResult laplace_from_density(double alpha, double lam, const QuadConfig& cfg = {});

/// laplace_from_density at lam = 0: the total mass of the computed density.
EvalResult density_mass(double alpha, const QuadConfig& cfg = {});

/// 1 - alpha lam / Gamma(1/alpha) + lam^alpha, for 0 <= lam <= 0.5.
double small_lambda_expansion(double alpha, double lam);

/// One row of a reconciliation table. `expansion` is empty for lam > 0.5.
struct LaplaceEval {
  double lam;
  double exact;
  double from_density;
  std::optional<double> expansion;
  double abs_gap;  // |exact - from_density|
};

LaplaceEval laplace_eval(double alpha, double lam, const QuadConfig& cfg = {});

/// Order of the remainder r(lam) = |laplace_exact - small_lambda_expansion|.
///
/// The remainder is lam^(1+alpha) times a series in mu = lam^(alpha-1), so a
/// plain log-log slope on a coarse grid is biased by the first corrections.
/// `order` comes from the exactly determined fit
///   log r = log C + p log lam + d1 mu + d2 mu^2
/// on four grid points; `plain_slope` is the ordinary least-squares slope.
struct RemainderOrder {
  double order;
  double plain_slope;
  double log_constant;
  std::vector<double> lambdas;
  std::vector<double> remainders;
};

/// Requires exactly four distinct lambdas in (0, 0.5].
RemainderOrder remainder_order(double alpha, std::span<const double> lambdas);

/// [laplace_exact - 1 + alpha lam / Gamma(1/alpha)] / lam^alpha, which tends to 1.
double power_coefficient(double alpha, double lam);

}  // namespace stablesup::laplace

#pragma once

// Density of S1 from its Fourier-type integral representation
//
//   s(x) = I1(x) / (pi Gamma(1/alpha)) + I2(x) / pi,
//   I1(x) = int_0^inf g1(t) cos(tx) + g2(t) sin(tx) dt,
//   I2(x) = int_0^inf exp(-a t^alpha) cos(b t^alpha + tx) dt,
//
// with a = -cos(alpha pi/2), b = sin(alpha pi/2), beta = 1 - 1/alpha and
//
//   g1(t) + ... = t int_0^1 exp(-a z t^alpha) (1 - z)^-beta {sin, cos}(b z t^alpha) dz.
//
// The inner z-integral keeps its endpoint singularity at z = 1 for every t and
// is done with Gauss-Jacobi (weight (1-z)^-beta) on the last panel and
// Gauss-Legendre elsewhere. Outer integrals are split at the zeros t = k pi / x
// of the oscillating factor; the conditionally convergent I1 tail is summed
// with an Euler transform, the I2 tail is truncated under its envelope.

#include <functional>
#include <memory>
#include <span>

#include "stablesup/config.hpp"
#include "stablesup/eval.hpp"
#include "stablesup/special.hpp"

namespace stablesup::oscint {

struct GValues {
  double g1;
  double g2;
};

struct HValues {
  double h1;
  double h2;
};

/// (g1(t), g2(t)) with node doubling (jacobi_nodes, x2, x4) until successive
/// results agree to rel_tol; throws QuadratureError otherwise.
GValues g_funcs(double alpha, double t, const QuadConfig& cfg = {});

/// h1(t) = exp(-a t^alpha) cos(b t^alpha), h2(t) = -exp(-a t^alpha) sin(b t^alpha).
HValues h_funcs(double alpha, double t);

EvalResult i1_integral(double alpha, double x, const QuadConfig& cfg = {});
EvalResult i2_integral(double alpha, double x, const QuadConfig& cfg = {});
EvalResult density_integral(double alpha, double x, const QuadConfig& cfg = {});

/// Series below series::trusted_limit(alpha), integral representation above.
EvalResult density_auto(double alpha, double x, const QuadConfig& cfg = {});

/// P(S1 <= x): the CDF series inside the trusted region, extended beyond it
/// by integrating density_integral from the trusted limit.
EvalResult cdf_auto(double alpha, double x, const QuadConfig& cfg = {});

/// Stateful evaluator for one alpha; reuses quadrature rules across calls.
class IntegralDensity {
 public:
  explicit IntegralDensity(double alpha, QuadConfig cfg = {});

  double alpha() const noexcept { return alpha_; }
  const QuadConfig& config() const noexcept { return cfg_; }

  /// Inner integrals with a fixed number of nodes per panel.
  GValues g(double t, int nodes) const;
  GValues g_checked(double t) const;

  EvalResult i1(double x) const;
  EvalResult i2(double x) const;
  EvalResult density(double x) const;

 private:
  double alpha_;
  special::TrigConstants trig_;
  QuadConfig cfg_;
  double gamma_eta_;
};

namespace detail {

enum class TailMode { accelerate, truncate };

struct HalfPeriodSum {
  double value;
  double abs_error;
  int segments;
};

/// Integral of f over [0, inf) split at t_k = k pi / x.
///
/// accelerate: partial sums are extended until Euler-transformed tails
/// starting at two successive cut points agree to tolerance.
/// truncate: segments are summed until envelope(t_k) drops below abs_tol
/// (or t_k passes cfg.outer_cutoff); tail_bound(t_k) is added to the error.
HalfPeriodSum half_period_integral(const std::function<double(double)>& f, double x, const QuadConfig& cfg,
                                   TailMode mode, const std::function<double(double)>& envelope = {},
                                   const std::function<double(double)>& tail_bound = {});

/// Euler (repeated averaging) transform of partial sums; returns the
/// accelerated value and the size of the last correction.
struct EulerEstimate {
  double value;
  double correction;
};
EulerEstimate euler_partial_sums(std::span<const double> partial_sums);

}  // namespace detail
}  // namespace stablesup::oscint

#pragma once

// Quadrature primitives shared by the integral representation, the Laplace
// transform and the normalization checks.

#include <functional>
#include <memory>
#include <vector>

namespace stablesup::quad {

/// Nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Jacobi rule for the weight (1 - x)^a (1 + x)^b, a, b > -1,
/// by the Golub-Welsch eigenvalue method.
GaussRule gauss_jacobi(int n, double a, double b);

/// Memoized gauss_jacobi; safe to call from several threads.
std::shared_ptr<const GaussRule> cached_gauss_jacobi(int n, double a, double b);

inline std::shared_ptr<const GaussRule> cached_gauss_legendre(int n) {
  return cached_gauss_jacobi(n, 0.0, 0.0);
}

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
};

/// Globally adaptive 21-point Gauss-Kronrod with QUADPACK error scaling.
/// Splits the worst panel until the summed error meets
/// max(abs_tol, rel_tol * |value|) or `max_intervals` panels exist.
QuadResult adaptive_gk(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
                       double rel_tol, int max_intervals = 1000);

/// adaptive_gk over geometrically growing panels [lo r^k, lo r^(k+1)];
/// suited to smooth integrands with power-law decay. Requires 0 < lo < hi.
QuadResult geometric_gk(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
                        double rel_tol, double ratio = 2.0);

/// Fixed composite Gauss-Legendre on `panels` equal pieces of [lo, hi].
double composite_legendre(const std::function<double(double)>& f, double lo, double hi, int panels,
                          int nodes);

}  // namespace stablesup::quad

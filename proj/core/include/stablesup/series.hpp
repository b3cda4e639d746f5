#pragma once

// Power series for the density of S1 under the canonical normalization:
//
//   s(x) = sum_{n>=1} a_n x^(alpha n - 2),
//   a_n  = 1 / (Gamma(alpha n - 1) Gamma(1/alpha + 1 - n)),
//
// and its term-wise antiderivative F(x) = sum a_n x^(alpha n - 1) / (alpha n - 1).
//
// The series is entire in x^alpha but alternating with factorially large
// intermediate terms, so every evaluation reports how many digits were lost.
// It is taken as given; it is not the expansion of the Laplace transform in
// negative powers of lambda.

#include "stablesup/config.hpp"
#include "stablesup/errors.hpp"
#include "stablesup/eval.hpp"

namespace stablesup::series {

struct SeriesDiag {
  int n_terms = 0;
  double max_term = 0.0;
  /// log10(max_term / |result|): decimal digits destroyed by cancellation.
  double cancellation_digits = 0.0;
  /// First-order bound on the accumulated rounding error: each term's
  /// relative error is taken as eps times the condition number of x^p and
  /// of the gamma factors with respect to their rounded arguments.
  double rounding_error = 0.0;
  bool converged = false;
};

struct SeriesValue {
  double value;
  SeriesDiag diag;
};

/// Thrown when the series cannot deliver a trustworthy double, either because
/// cancellation exceeds defaults::kCancellationGate or because it did not
/// converge. Carries the diagnostics of the failed evaluation.
class PrecisionLossError : public Error {
 public:
  PrecisionLossError(const std::string& what, SeriesDiag diag) : Error(what), diag_(diag) {}
  const SeriesDiag& diag() const noexcept { return diag_; }

 private:
  SeriesDiag diag_;
};

/// a_n, always via recip_gamma (log domain once the gamma factors overflow).
double series_coeff(double alpha, int n);

SeriesValue density_series(double alpha, double x, double tol = defaults::kSeriesTol);

SeriesValue cdf_series(double alpha, double x, double tol = defaults::kSeriesTol);

/// Wraps a series value with an error estimate: the rounding bound plus the
/// truncation tolerance.
EvalResult as_eval(const SeriesValue& sv);

/// Largest x at which density_series loses at most defaults::kAutoSwitchDigits
/// digits; the automatic method switches to the integral representation
/// beyond it. Memoized per alpha.
double trusted_limit(double alpha);

}  // namespace stablesup::series

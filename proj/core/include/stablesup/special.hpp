#pragma once

// Special functions and the closed-form constants of the tail asymptotics.

namespace stablesup::special {

/// Gamma function. Throws DomainError at poles, RangeError on overflow.
double gamma_fn(double z);

/// 1/Gamma(z), an entire function: exactly 0 at non-positive integers.
/// For z < 1/2 the reflection 1/Gamma(z) = Gamma(1-z) sin(pi z) / pi is used.
double recip_gamma(double z);

/// log|1/Gamma(z)| and the sign of 1/Gamma(z) (sign 0 at the poles of Gamma).
struct LogRecipGamma {
  double log_abs;
  int sign;
};
LogRecipGamma log_recip_gamma(double z);

/// sin(pi z) with exact zeros at the integers.
double sin_pi(double z);

/// Lower incomplete gamma: integral of y^(eta-1) e^(-y) over [0, u].
double lower_inc_gamma(double eta, double u);

/// e^u * Gamma(eta, u): the upper incomplete gamma scaled so that it stays
/// representable for large u (continued fraction, no cancellation).
double upper_inc_gamma_scaled(double eta, double u);

/// Gamma(-alpha) for 1 < alpha < 2, from Gamma(1 + alpha) by reflection.
double gamma_neg_index(double alpha);

/// Levy constant of the canonical normalization, 1/Gamma(-alpha).
double canonical_constant(double alpha);

struct TrigConstants {
  double a;     ///< -cos(alpha pi / 2), positive on (1, 2)
  double b;     ///< sin(alpha pi / 2), positive on (1, 2)
  double beta;  ///< 1 - 1/alpha, in (0, 1/2)
};

TrigConstants trig_constants(double alpha);

/// Constants of the tail law s(x) ~ c x^-(alpha+1).
///
/// k1, k2 are the leading coefficients of h1''' and h2''' at the origin,
/// l1, l2 the Fourier cosine/sine tail constants for an integrand whose third
/// derivative behaves like t^(alpha-3). They satisfy
/// (k1 l1 + k2 l2) / pi = c_canonical.
struct AsymptoteConstants {
  double k1;
  double k2;
  double l1;
  double l2;
  double c_canonical;
};

AsymptoteConstants asymptote_constants(double alpha);

}  // namespace stablesup::special

#include "stablesup/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "stablesup/errors.hpp"

namespace stablesup::special {
namespace {

constexpr double kPi = std::numbers::pi;
// Gamma(z) overflows a double just above 171.6.
constexpr double kMaxGammaArg = 171.0;
constexpr double kTiny = 1e-300;

bool is_pole(double z) { return z <= 0.0 && std::floor(z) == z; }

// Power series of gamma(eta, u) * e^u * u^-eta; converges for all u, fast for u < eta + 1.
double lower_series(double eta, double u) {
  double term = 1.0 / eta;
  double sum = term;
  for (int n = 1; n < 100000; ++n) {
    term *= u / (eta + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-17) break;
  }
  return sum;
}

// Modified Lentz evaluation of the continued fraction for e^u u^-eta Gamma(eta, u).
double upper_fraction(double eta, double u) {
  double b = u + 1.0 - eta;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -i * (i - eta);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h;
}

void require_incomplete_args(double eta, double u) {
  if (!(eta > 0.0) || !std::isfinite(eta)) throw DomainError("eta", "must be positive");
  if (!(u >= 0.0)) throw DomainError("u", "must be non-negative");
}

}  // namespace

double gamma_fn(double z) {
  if (std::isnan(z)) throw DomainError("z", "NaN argument");
  if (is_pole(z)) throw DomainError("z", "Gamma has a pole at non-positive integers");
  const double g = std::tgamma(z);
  if (!std::isfinite(g)) throw RangeError("gamma_fn: result overflows a double");
  return g;
}

double sin_pi(double z) {
  if (!std::isfinite(z)) throw DomainError("z", "argument must be finite");
  double r = std::fmod(z, 2.0);  // (-2, 2)
  if (r > 1.0) {
    r -= 2.0;
  } else if (r < -1.0) {
    r += 2.0;
  }
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(kPi * r);
}

double recip_gamma(double z) {
  if (std::isnan(z)) throw DomainError("z", "NaN argument");
  if (is_pole(z)) return 0.0;
  if (z >= 0.5) {
    if (z < kMaxGammaArg) return 1.0 / std::tgamma(z);
    return std::exp(-std::lgamma(z));
  }
  const double w = 1.0 - z;
  const double s = sin_pi(z);
  if (w < kMaxGammaArg) return std::tgamma(w) * s / kPi;
  return std::copysign(std::exp(std::lgamma(w) + std::log(std::abs(s)) - std::log(kPi)), s);
}

LogRecipGamma log_recip_gamma(double z) {
  if (std::isnan(z)) throw DomainError("z", "NaN argument");
  if (is_pole(z)) return {-std::numeric_limits<double>::infinity(), 0};
  if (z >= 0.5) return {-std::lgamma(z), 1};
  const double s = sin_pi(z);
  return {std::lgamma(1.0 - z) + std::log(std::abs(s)) - std::log(kPi), s > 0.0 ? 1 : -1};
}

double lower_inc_gamma(double eta, double u) {
  require_incomplete_args(eta, u);
  if (u == 0.0) return 0.0;
  const double prefactor = std::exp(eta * std::log(u) - u);
  if (u < eta + 1.0) return prefactor * lower_series(eta, u);
  return std::tgamma(eta) - prefactor * upper_fraction(eta, u);
}

double upper_inc_gamma_scaled(double eta, double u) {
  require_incomplete_args(eta, u);
  if (u < eta + 1.0) {
    const double lower = u == 0.0 ? 0.0 : std::exp(eta * std::log(u) - u) * lower_series(eta, u);
    return std::exp(u) * (std::tgamma(eta) - lower);
  }
  return std::exp(eta * std::log(u)) * upper_fraction(eta, u);
}

double gamma_neg_index(double alpha) {
  require_index(alpha);
  // Gamma(-a) Gamma(1 + a) = pi / sin(-pi a)
  return -kPi / (sin_pi(alpha) * std::tgamma(1.0 + alpha));
}

double canonical_constant(double alpha) {
  require_index(alpha);
  return -sin_pi(alpha) * std::tgamma(1.0 + alpha) / kPi;
}

TrigConstants trig_constants(double alpha) {
  require_index(alpha);
  const double angle = alpha * kPi / 2.0;
  return {-std::cos(angle), std::sin(angle), 1.0 - 1.0 / alpha};
}

AsymptoteConstants asymptote_constants(double alpha) {
  const TrigConstants tc = trig_constants(alpha);
  const double poly = alpha * (alpha - 1.0) * (2.0 - alpha);
  const double g3 = std::tgamma(3.0 - alpha);
  return {
      tc.a * poly,
      tc.b * poly,
      kPi / (2.0 * g3 * tc.a),
      kPi / (2.0 * g3 * tc.b),
      canonical_constant(alpha),
  };
}

}  // namespace stablesup::special

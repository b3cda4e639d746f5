#pragma once

#include <concepts>

#include "stablesup/errors.hpp"

namespace stablesup {

/// Parameters of a spectrally positive stable process with Levy density
/// c x^-(alpha+1) on (0, inf).
///
/// Every quantity is computed for the canonical constant c0 = 1/Gamma(-alpha)
/// (Laplace exponent lambda^alpha) and transferred to c by a spatial scaling:
/// S1 for constant c has the law of gamma_scale * S1 for c0, with
/// gamma_scale = (c / c0)^(1/alpha).
struct StableSpec {
  double alpha;
  double c;
  double gamma_scale;

  bool is_canonical() const noexcept { return gamma_scale == 1.0; }
};

/// Validates (alpha, c) and computes the scale factor.
StableSpec make_spec(double alpha, double c);

/// The spec with c = 1/Gamma(-alpha); its gamma_scale is exactly 1.
StableSpec canonical_spec(double alpha);

/// s_c(x) = s(x / gamma_scale) / gamma_scale for a canonical density s.
template <std::invocable<double> Density>
double canonical_density_transfer(const StableSpec& spec, double x, Density&& s_canonical) {
  if (!(x > 0.0)) throw DomainError("x", "must be positive");
  return s_canonical(x / spec.gamma_scale) / spec.gamma_scale;
}

}  // namespace stablesup

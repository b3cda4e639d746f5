#pragma once

// Extended-precision evaluation of the density/CDF series, used as a test
// oracle beyond the double-precision trusted region. Digits10 sets the
// decimal mantissa; choose it larger than the expected cancellation.

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "stablesup/errors.hpp"

namespace stablesup::series {

template <unsigned Digits10>
using HpReal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits10>,
                                             boost::multiprecision::et_off>;

template <unsigned Digits10>
double series_hp(double alpha_in, double x_in, bool cdf) {
  using Real = HpReal<Digits10>;
  require_index(alpha_in);
  if (!(x_in > 0.0)) throw DomainError("x", "must be positive");

  const Real alpha(alpha_in);
  const Real x(x_in);
  const Real eta = Real(1) / alpha;
  const Real tol = pow(Real(10), -static_cast<int>(Digits10) + 5);
  const Real shift = cdf ? Real(1) : Real(2);

  Real sum = 0;
  Real prev = -1;
  int below = 0;
  for (int n = 1; n < 2000000; ++n) {
    const Real power = alpha * n - shift;
    Real term = pow(x, power) / (boost::math::tgamma(alpha * n - 1) * boost::math::tgamma(eta + 1 - n));
    if (cdf) term /= alpha * n - 1;
    sum += term;
    const Real mag = abs(term);
    below = (mag < tol * abs(sum) && prev >= 0 && mag < prev) ? below + 1 : 0;
    prev = mag;
    if (below >= 3) return static_cast<double>(sum);
  }
  throw Error("series_hp: no convergence");
}

template <unsigned Digits10>
double density_series_hp(double alpha, double x) {
  return series_hp<Digits10>(alpha, x, false);
}

template <unsigned Digits10>
double cdf_series_hp(double alpha, double x) {
  return series_hp<Digits10>(alpha, x, true);
}

}  // namespace stablesup::series

#include "stablesup/params.hpp"

#include <cmath>

#include "stablesup/special.hpp"

namespace stablesup {

StableSpec make_spec(double alpha, double c) {
  require_index(alpha);
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("c", "Levy constant must be positive and finite");
  // c * Gamma(-alpha) written as a ratio so the canonical constant maps to exactly 1.
  const double ratio = c / special::canonical_constant(alpha);
  return {alpha, c, std::pow(ratio, 1.0 / alpha)};
}

StableSpec canonical_spec(double alpha) { return make_spec(alpha, special::canonical_constant(alpha)); }

}  // namespace stablesup

#include <cmath>

#include "stablesup/config.hpp"
#include "stablesup/errors.hpp"
#include "stablesup/eval.hpp"

namespace stablesup {

void require_index(double alpha) {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw DomainError("alpha", "stable index must satisfy 1 < alpha < 2");
  }
}

void QuadConfig::validate() const {
  if (!(abs_tol > 0.0)) throw DomainError("abs_tol", "must be positive");
  if (!(rel_tol > 0.0)) throw DomainError("rel_tol", "must be positive");
  if (jacobi_nodes < 8) throw DomainError("jacobi_nodes", "must be at least 8");
  if (accel_depth < 2) throw DomainError("accel_depth", "must be at least 2");
  if (max_half_periods < accel_depth) {
    throw DomainError("max_half_periods", "must be at least accel_depth");
  }
  if (!(outer_cutoff > 0.0)) throw DomainError("outer_cutoff", "must be positive");
}

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::series: return "series";
    case Method::integral: return "integral";
    case Method::automatic: return "auto";
    case Method::laplace_exact: return "laplace_exact";
    case Method::laplace_numeric: return "laplace_numeric";
    case Method::mc: return "mc";
    case Method::law: return "law";
  }
  return "unknown";
}

double EvalResult::rel_error() const noexcept {
  return value != 0.0 ? abs_error / std::abs(value) : abs_error;
}

}  // namespace stablesup

#pragma once

#include <map>
#include <string>
#include <string_view>

namespace stablesup {

enum class Method { series, integral, automatic, laplace_exact, laplace_numeric, mc, law };

/// Wire name of a method tag ("auto" for Method::automatic).
std::string_view method_name(Method m) noexcept;

/// A computed scalar with its provenance and an error estimate.
struct EvalResult {
  double value = 0.0;
  double abs_error = 0.0;
  Method method = Method::integral;
  std::map<std::string, double> diagnostics;

  double rel_error() const noexcept;
};

}  // namespace stablesup

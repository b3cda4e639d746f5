#pragma once

// Every numerical default of the library lives in this header so that a table
// can be reproduced from a single command line.

#include <array>
#include <cstddef>
#include <cstdint>

namespace stablesup {

/// Tolerances and sizes for all quadrature in the integral representation.
struct QuadConfig {
  double abs_tol = 1e-15;
  double rel_tol = 1e-11;
  /// Nodes per panel of the inner Gauss-Jacobi / Gauss-Legendre rules.
  int jacobi_nodes = 32;
  /// Hard cap on the number of half-period segments of one outer integral.
  int max_half_periods = 200000;
  /// Number of terms fed to the Euler transform of an alternating tail.
  int accel_depth = 12;
  /// Largest t at which an absolutely convergent outer integral is truncated.
  double outer_cutoff = 1e4;

  /// Throws DomainError when an invariant is violated.
  void validate() const;
};

namespace defaults {

inline constexpr double kSeriesTol = 1e-12;
/// Decimal digits carried by a double.
inline constexpr int kWorkingDigits = 15;
/// Series evaluation fails beyond this many digits of cancellation.
inline constexpr double kCancellationGate = kWorkingDigits - 6;
/// The automatic method switch keeps the series below this cancellation.
inline constexpr double kAutoSwitchDigits = 6.0;
/// Upper end of the density integration used for normalization and Laplace
/// checks; the power-law tail beyond it is added in closed form.
inline constexpr double kTailStart = 200.0;

inline constexpr std::size_t kMcPaths = 100000;
inline constexpr std::size_t kMcSteps = 10000;
inline constexpr std::size_t kMcPathsFast = 10000;
inline constexpr std::size_t kMcStepsFast = 1000;
inline constexpr std::size_t kMcChunk = 1000;
inline constexpr std::uint64_t kMcSeed = 42;

// Verification gates shared by `stablesup verify` and the acceptance suite.

/// |(k1 l1 + k2 l2)/pi - 1/Gamma(-alpha)|.
inline constexpr double kIdentityTol = 1e-12;
/// Fourier-tail harness: absolute exponent error and relative constant error.
inline constexpr double kHarnessExponentTol = 0.02;
inline constexpr double kHarnessConstantTol = 0.01;
/// |s(200) / (c 200^-(alpha+1)) - 1|. Calibrated against a 30-digit
/// evaluation of the density, whose largest deviation over alpha in
/// {1.2, 1.5, 1.8} is 1.06% (alpha = 1.8).
inline constexpr double kTailRatioBound = 0.02;
/// Relative agreement of the series and integral densities.
inline constexpr double kCrossMethodTol = 1e-6;

inline constexpr std::array<double, 4> kHarnessGrid{8.0, 16.0, 32.0, 64.0};
inline constexpr std::array<double, 4> kTailRatioGrid{25.0, 50.0, 100.0, 200.0};
inline constexpr std::array<double, 3> kMcGrid{1.0, 2.0, 5.0};
inline constexpr std::array<double, 4> kRemainderGrid{0.2, 0.1, 0.05, 0.025};

}  // namespace defaults
}  // namespace stablesup

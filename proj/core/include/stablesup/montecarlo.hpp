#pragma once

// Monte Carlo oracle: paths of the canonical spectrally positive stable
// process on a uniform grid of [0, 1] and their running maxima.
//
// Increments come from the Chambers-Mallows-Stuck transform with skewness 1
// and scale sigma = (dt |cos(pi alpha / 2)|)^(1/alpha). For that law
// E exp(-lam X) = exp(-sigma^alpha lam^alpha / cos(pi alpha / 2)) = exp(dt lam^alpha),
// which is the canonical Laplace exponent. laplace_check() tests this mapping
// by simulation.
//
// The maximum over grid points underestimates the supremum over [0, 1]. That
// bias is negative, shrinks with n_steps, and is left uncorrected.
//
// Reproducibility: path chunk k draws from its own std::mt19937_64 seeded with
// splitmix64 applied to seed + (k + 1) * 0x9E3779B97F4A7C15. Uniforms are
// ((u64 >> 11) + 1/2) * 2^-53 and exponentials -log(u), so the stream-to-value map
// does not depend on the standard library's distribution classes. Chunks are
// written to fixed slots, which makes the result independent of thread count.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "stablesup/config.hpp"

namespace stablesup::mc {

struct McRun {
  std::size_t n_paths = defaults::kMcPaths;
  std::size_t n_steps = defaults::kMcSteps;
  std::uint64_t seed = defaults::kMcSeed;
  std::size_t chunk_size = defaults::kMcChunk;

  void validate() const;
};

struct SupremumSample {
  /// Grid suprema, ascending.
  std::vector<double> values;
  /// Per path, in path order: grid supremum and the endpoint X_1.
  std::vector<double> path_suprema;
  std::vector<double> endpoints;
  std::size_t discretization = 0;
};

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Generator for chunk `index` of a run seeded with `seed`.
Rng chunk_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform on the open interval (0, 1).
double open_uniform(Rng& rng) noexcept;

/// sigma = (dt |cos(pi alpha / 2)|)^(1/alpha).
double cms_scale(double alpha, double dt);

/// One increment X_dt of the canonical process.
double sample_stable(double alpha, double dt, Rng& rng);

/// Worker count: STABLESUP_THREADS if set to a positive integer, otherwise
/// std::thread::hardware_concurrency() (at least 1).
unsigned default_threads();

/// threads = 0 selects default_threads().
SupremumSample simulate_supremum(double alpha, const McRun& run, unsigned threads = 0);

/// (fraction of values > x, sqrt(p (1 - p) / n)).
std::pair<double, double> empirical_tail(const SupremumSample& sample, double x);

struct LaplaceCheck {
  double mean;            // sample mean of exp(-lam X_1)
  double standard_error;
  double target;          // exp(lam^alpha)
};

/// Draws n increments at dt = 1 from the stream chunk_rng(seed, 0).
LaplaceCheck laplace_check(double alpha, double lam, std::size_t n, std::uint64_t seed);

}  // namespace stablesup::mc

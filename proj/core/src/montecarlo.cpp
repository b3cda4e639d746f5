#include "stablesup/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "stablesup/errors.hpp"

namespace stablesup::mc {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr double kTwoPow53 = 9007199254740992.0;

struct CmsConstants {
  double alpha;
  double skew_shift;  // B = atan(tan(pi alpha / 2)) / alpha
  double skew_scale;  // (1 + tan^2(pi alpha / 2))^(1 / (2 alpha))
  double sigma;
};

CmsConstants cms_constants(double alpha, double dt) {
  const double t = std::tan(std::numbers::pi * alpha / 2.0);
  return {alpha, std::atan(t) / alpha, std::pow(1.0 + t * t, 1.0 / (2.0 * alpha)), cms_scale(alpha, dt)};
}

double cms_draw(const CmsConstants& k, Rng& rng) {
  const double v = std::numbers::pi * (open_uniform(rng) - 0.5);
  const double w = -std::log(open_uniform(rng));
  const double shifted = k.alpha * (v + k.skew_shift);
  const double x = k.skew_scale * std::sin(shifted) / std::pow(std::cos(v), 1.0 / k.alpha) *
                   std::pow(std::cos(v - shifted) / w, (1.0 - k.alpha) / k.alpha);
  return k.sigma * x;
}

}  // namespace

void McRun::validate() const {
  if (n_paths < 1) throw DomainError("n_paths", "must be at least 1");
  if (n_steps < 1) throw DomainError("n_steps", "must be at least 1");
  if (chunk_size < 1) throw DomainError("chunk_size", "must be at least 1");
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng chunk_rng(std::uint64_t seed, std::uint64_t index) { return Rng(splitmix64(seed + (index + 1) * kGolden)); }

double open_uniform(Rng& rng) noexcept {
  // Midpoints of the 2^53 dyadic cells, so neither 0 nor 1 occurs.
  return (static_cast<double>(rng() >> 11) + 0.5) / kTwoPow53;
}

double cms_scale(double alpha, double dt) {
  require_index(alpha);
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt", "must be positive and finite");
  return std::pow(dt * std::abs(std::cos(std::numbers::pi * alpha / 2.0)), 1.0 / alpha);
}

double sample_stable(double alpha, double dt, Rng& rng) { return cms_draw(cms_constants(alpha, dt), rng); }

unsigned default_threads() {
  if (const char* env = std::getenv("STABLESUP_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // Unparseable values fall through to the hardware default.
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SupremumSample simulate_supremum(double alpha, const McRun& run, unsigned threads) {
  require_index(alpha);
  run.validate();
  const CmsConstants k = cms_constants(alpha, 1.0 / static_cast<double>(run.n_steps));

  SupremumSample out;
  out.discretization = run.n_steps;
  out.path_suprema.assign(run.n_paths, 0.0);
  out.endpoints.assign(run.n_paths, 0.0);
  const std::size_t chunks = (run.n_paths + run.chunk_size - 1) / run.chunk_size;

  const auto do_chunk = [&](std::size_t c) {
    Rng rng = chunk_rng(run.seed, c);
    const std::size_t end = std::min(run.n_paths, (c + 1) * run.chunk_size);
    for (std::size_t p = c * run.chunk_size; p < end; ++p) {
      double level = 0.0;
      double peak = -std::numeric_limits<double>::infinity();
      for (std::size_t s = 0; s < run.n_steps; ++s) {
        level += cms_draw(k, rng);
        peak = std::max(peak, level);
      }
      out.path_suprema[p] = peak;
      out.endpoints[p] = level;
    }
  };

  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(threads == 0 ? default_threads() : threads, chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) do_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t c = next++; c < chunks; c = next++) do_chunk(c);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }

  out.values = out.path_suprema;
  std::sort(out.values.begin(), out.values.end());
  return out;
}

std::pair<double, double> empirical_tail(const SupremumSample& sample, double x) {
  if (sample.values.empty()) throw DomainError("sample", "must be nonempty");
  const auto above = sample.values.end() - std::upper_bound(sample.values.begin(), sample.values.end(), x);
  const double n = static_cast<double>(sample.values.size());
  const double p = static_cast<double>(above) / n;
  return {p, std::sqrt(p * (1.0 - p) / n)};
}

LaplaceCheck laplace_check(double alpha, double lam, std::size_t n, std::uint64_t seed) {
  require_index(alpha);
  if (!(lam >= 0.0)) throw DomainError("lam", "must be non-negative");
  if (n < 2) throw DomainError("n", "needs at least two draws");
  const CmsConstants k = cms_constants(alpha, 1.0);
  Rng rng = chunk_rng(seed, 0);
  // Welford accumulation of exp(-lam X).
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double y = std::exp(-lam * cms_draw(k, rng));
    const double delta = y - mean;
    mean += delta / static_cast<double>(i);
    m2 += delta * (y - mean);
  }
  const double var = m2 / static_cast<double>(n - 1);
  return {mean, std::sqrt(var / static_cast<double>(n)), std::exp(std::pow(lam, alpha))};
}

}  // namespace stablesup::mc

#include "stablesup/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <array>
#include <queue>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>

#include "stablesup/errors.hpp"

namespace stablesup::quad {

GaussRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw DomainError("n", "rule needs at least one node");
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("a,b", "Jacobi exponents must exceed -1");

  // Monic three-term recurrence coefficients of the Jacobi polynomials.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  const double ab = a + b;
  diag(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (b * b - a * a) / (s * (s + 2.0));
    const double beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    sub(k - 1) = std::sqrt(beta);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw Error("gauss_jacobi: eigen decomposition failed");

  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                              std::lgamma(ab + 2.0));
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

std::shared_ptr<const GaussRule> cached_gauss_jacobi(int n, double a, double b) {
  static std::mutex mutex;
  static std::map<std::tuple<int, double, double>, std::shared_ptr<const GaussRule>> cache;
  const auto key = std::make_tuple(n, a, b);
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_shared<const GaussRule>(gauss_jacobi(n, a, b))).first;
  }
  return it->second;
}

namespace {

struct Gk21 {
  double value;
  double error;
};

Gk21 gk21(const std::function<double(double)>& f, double lo, double hi) {
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
  using Gauss = boost::math::quadrature::gauss<double, 10>;
  static const auto& xk = Kronrod::abscissa();
  static const auto& wk = Kronrod::weights();
  static const auto& wg = Gauss::weights();

  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  // abscissa()[0] = 0; odd indices coincide with the 10-point Gauss nodes.
  std::array<double, 21> fv{};
  fv[0] = f(center);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    fv[2 * i - 1] = f(center - half * xk[i]);
    fv[2 * i] = f(center + half * xk[i]);
  }
  double kron = wk[0] * fv[0];
  double gauss = 0.0;
  double abs_sum = std::abs(kron);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const double pair = fv[2 * i - 1] + fv[2 * i];
    kron += wk[i] * pair;
    abs_sum += wk[i] * (std::abs(fv[2 * i - 1]) + std::abs(fv[2 * i]));
    if (i % 2 == 1) gauss += wg[(i - 1) / 2] * pair;
  }
  const double mean = 0.5 * kron;
  double asc = wk[0] * std::abs(fv[0] - mean);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    asc += wk[i] * (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));
  }
  kron *= half;
  gauss *= half;
  asc *= half;
  abs_sum *= half;

  double err = std::abs(kron - gauss);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (abs_sum > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(err, 50.0 * eps * abs_sum);
  return {kron, err};
}

struct Panel {
  double lo;
  double hi;
  Gk21 r;
  bool operator<(const Panel& other) const { return r.error < other.r.error; }
};

}  // namespace

QuadResult adaptive_gk(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
                       double rel_tol, int max_intervals) {
  QuadResult out;
  if (lo == hi) return out;
  // Global adaptation: always split the panel with the largest error, so a
  // noisy integrand exhausts the panel budget instead of recursing without bound.
  std::priority_queue<Panel> heap;
  heap.push({lo, hi, gk21(f, lo, hi)});
  out.evaluations = 21;
  double value = heap.top().r.value;
  double error = heap.top().r.error;
  while (error > std::max(abs_tol, rel_tol * std::abs(value)) && static_cast<int>(heap.size()) < max_intervals) {
    const Panel worst = heap.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) break;
    heap.pop();
    const Panel left{worst.lo, mid, gk21(f, worst.lo, mid)};
    const Panel right{mid, worst.hi, gk21(f, mid, worst.hi)};
    out.evaluations += 42;
    value += left.r.value + right.r.value - worst.r.value;
    error += left.r.error + right.r.error - worst.r.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-add from the panels so the running updates leave no drift.
  while (!heap.empty()) {
    out.value += heap.top().r.value;
    out.abs_error += heap.top().r.error;
    heap.pop();
  }
  return out;
}

QuadResult geometric_gk(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
                        double rel_tol, double ratio) {
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("lo,hi", "need 0 < lo < hi");
  if (!(ratio > 1.0)) throw DomainError("ratio", "must exceed 1");
  QuadResult out;
  const int panels = std::max(1, static_cast<int>(std::ceil(std::log(hi / lo) / std::log(ratio))));
  const double step = std::pow(hi / lo, 1.0 / panels);
  double left = lo;
  for (int p = 0; p < panels; ++p) {
    const double right = p + 1 == panels ? hi : left * step;
    const QuadResult r = adaptive_gk(f, left, right, abs_tol / panels, rel_tol);
    out.value += r.value;
    out.abs_error += r.abs_error;
    out.evaluations += r.evaluations;
    left = right;
  }
  return out;
}

double composite_legendre(const std::function<double(double)>& f, double lo, double hi, int panels,
                          int nodes) {
  const auto rule = cached_gauss_legendre(nodes);
  const double width = (hi - lo) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double center = lo + (p + 0.5) * width;
    for (int i = 0; i < nodes; ++i) {
      sum += rule->weights[i] * f(center + 0.5 * width * rule->nodes[i]);
    }
  }
  return 0.5 * width * sum;
}

}  // namespace stablesup::quad

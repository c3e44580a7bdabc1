#include "zetasum/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/legendre.hpp>

namespace zetasum {
namespace {

// Kronrod nodes on [-1, 1] expanded from boost's half tables, with the
// embedded Gauss weights attached (zero where the node is Kronrod-only).
struct KronrodRule {
  std::vector<double> nodes;
  std::vector<double> kronrod_weights;
  std::vector<double> gauss_weights;
};

const KronrodRule& kronrod21() {
  static const KronrodRule rule = [] {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    const auto& kx = gauss_kronrod<double, 21>::abscissa();
    const auto& kw = gauss_kronrod<double, 21>::weights();
    const auto& gx = gauss<double, 10>::abscissa();
    const auto& gw = gauss<double, 10>::weights();
    KronrodRule r;
    for (std::size_t i = 0; i < kx.size(); ++i) {
      double gweight = 0.0;
      for (std::size_t j = 0; j < gx.size(); ++j)
        if (std::abs(gx[j] - kx[i]) < 1e-14) gweight = gw[j];
      r.nodes.push_back(kx[i]);
      r.kronrod_weights.push_back(kw[i]);
      r.gauss_weights.push_back(gweight);
      if (kx[i] != 0.0) {
        r.nodes.push_back(-kx[i]);
        r.kronrod_weights.push_back(kw[i]);
        r.gauss_weights.push_back(gweight);
      }
    }
    return r;
  }();
  return rule;
}

struct Panel {
  double lo;
  double hi;
  Complex value;
  double err;
  bool operator<(const Panel& other) const { return err < other.err; }
};

Panel evaluate_panel(const RealIntegrand& f, double lo, double hi) {
  const KronrodRule& rule = kronrod21();
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  Complex kronrod = 0.0;
  Complex gauss = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const Complex v = f(mid + half * rule.nodes[i]);
    kronrod += rule.kronrod_weights[i] * v;
    gauss += rule.gauss_weights[i] * v;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

EvalResult integrate_interval(const RealIntegrand& f, double lo, double hi, const QuadratureConfig& cfg) {
  if (lo == hi) return {0.0, 0.0, Method::quadrature};
  std::priority_queue<Panel> heap;
  heap.push(evaluate_panel(f, lo, hi));
  Complex total = heap.top().value;
  double err = heap.top().err;
  int panels = 1;
  while (err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
    if (panels >= cfg.max_panels) throw ConvergenceError("quadrature: panel budget exhausted", total, err);
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      throw ConvergenceError("quadrature: interval cannot be bisected further", total, err);
    }
    const Panel left = evaluate_panel(f, worst.lo, mid);
    const Panel right = evaluate_panel(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  // Recompute the sums from the panels to shed accumulated update error.
  total = 0.0;
  err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().err;
    heap.pop();
  }
  return {total, err, Method::quadrature};
}

EvalResult real_axis_quadrature(const RealIntegrand& f, double tol) {
  QuadratureConfig cfg;
  cfg.rel_tol = tol;
  Complex total = 0.0;
  double err = 0.0;
  int quiet = 0;
  double lo = 0.0;
  double hi = 1.0;
  for (int k = 0; k < 40; ++k) {
    cfg.abs_tol = std::max(1e-300, 0.1 * tol * std::abs(total));
    const EvalResult piece = integrate_interval(f, lo, hi, cfg);
    total += piece.value;
    err += piece.abs_err;
    const double edge = std::abs(f(hi)) * (hi - lo);
    if (std::abs(piece.value) <= tol * std::abs(total) && edge <= tol * std::abs(total)) {
      if (++quiet == 2) return {total, err + std::abs(piece.value), Method::quadrature};
    } else {
      quiet = 0;
    }
    lo = hi;
    hi *= 2.0;
  }
  throw ConvergenceError("real_axis_quadrature: tail did not decay", total, err);
}

EvalResult integrate_segment(const PathIntegrand& f, Complex from, Complex to, const QuadratureConfig& cfg) {
  const Complex dir = to - from;
  EvalResult r = integrate_interval([&](double tau) { return f(from + tau * dir) * dir; }, 0.0, 1.0, cfg);
  return r;
}

GaussRule gauss_legendre(int n) {
  if (n < 2 || n > 64) throw DomainError("gauss_legendre: node count must lie in [2, 64]");
  static std::mutex mutex;
  static std::map<int, std::vector<double>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    // boost returns the nonnegative zeros in increasing order.
    const std::vector<double> zeros = boost::math::legendre_p_zeros<double>(n);
    std::vector<double> nodes;
    for (auto z = zeros.rbegin(); z != zeros.rend(); ++z)
      if (*z != 0.0) nodes.push_back(-*z);
    for (double z : zeros) nodes.push_back(z);
    std::vector<double> packed = nodes;
    for (double x : nodes) {
      const double dp = boost::math::legendre_p_prime(n, x);
      packed.push_back(2.0 / ((1.0 - x * x) * dp * dp));
    }
    it = cache.emplace(n, std::move(packed)).first;
  }
  const std::vector<double>& data = it->second;
  return {std::span<const double>(data.data(), n), std::span<const double>(data.data() + n, n)};
}

}  // namespace zetasum

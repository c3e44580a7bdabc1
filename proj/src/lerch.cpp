#include "zetasum/lerch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "zetasum/quadrature.hpp"
#include "zetasum/special_core.hpp"

namespace zetasum {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSDerivOrder = 12;
constexpr int kMaxNegOrder = 30;
// Below this t the integral kernels are evaluated from their Taylor series.
constexpr double kKernelPatch = 0.01;

double choose(int n, int k) { return static_cast<double>(binomial(n, k)); }

// Sums lambda^n f(n) for n >= 0 with |lambda| < 1. Once n + Re(a) >= 2 the
// observed ratio of consecutive term moduli bounds every later ratio (the f
// used here have monotonically decreasing ratios), giving the tail majorant
// |t| r / (1 - r).
template <class Term>
EvalResult sum_weighted_series(Complex lambda, double a_re, const LerchConfig& cfg, Term&& term, const char* what) {
  if (lambda == Complex(0.0, 0.0)) return {term(0, Complex(1.0, 0.0)), kEps, Method::series};
  Complex sum = 0.0;
  Complex lam_pow = 1.0;
  double magnitude = 0.0;
  double prev = 0.0;
  double tail = std::numeric_limits<double>::infinity();
  for (long n = 0; n < cfg.max_terms; ++n) {
    const Complex t = term(n, lam_pow);
    sum += t;
    const double size = std::abs(t);
    magnitude += size;
    if (n >= 1 && n + a_re >= 2.0 && prev > 0.0) {
      const double r = size / prev;
      if (r < 1.0) tail = size * r / (1.0 - r);
      if (tail <= cfg.rel_tol * std::abs(sum) || tail < 1e-300)
        return {sum, tail + 4.0 * kEps * magnitude, Method::series};
    }
    prev = size;
    lam_pow *= lambda;
  }
  throw ConvergenceError(std::string(what) + ": slow convergence, term budget of " +
                             std::to_string(cfg.max_terms) + " exhausted",
                         sum, tail);
}

// |lambda| = 1: N terms summed directly, then the tail
// lambda^N Phi(lambda, s, x), x = a + N, from its expansion
// x^-s sum_k C(-s, k) F_k(lambda) x^-k with F_k the Abel sum of n^k lambda^n.
// N is chosen so that |arg lambda| Re(x) >= 60 + 2|s|, where the expansion
// is far inside its useful range.
template <bool Deriv>
EvalResult unit_circle_series(Complex lambda, Complex s, Complex a, const LerchConfig& cfg, const char* what) {
  const double delta = std::abs(std::arg(lambda));
  const double need = (60.0 + 2.0 * std::abs(s)) / delta - a.real();
  if (need > static_cast<double>(cfg.max_terms)) {
    throw ConvergenceError(std::string(what) + ": slow convergence, lambda too close to 1 for the term budget",
                           Complex(std::nan(""), 0.0), std::numeric_limits<double>::infinity());
  }
  const long shift = std::max(0L, static_cast<long>(std::ceil(need)));
  Complex sum = 0.0;
  double magnitude = 0.0;
  Complex lam_pow = 1.0;
  for (long n = 0; n < shift; ++n) {
    const Complex lg = std::log(static_cast<double>(n) + a);
    Complex t = lam_pow * std::exp(-s * lg);
    if (Deriv) t *= -lg;
    sum += t;
    magnitude += std::abs(t);
    lam_pow *= lambda;
  }
  const Complex x = a + static_cast<double>(shift);
  const Complex lx = std::log(x);
  const Complex xs = std::exp(-s * lx);
  Complex c = 1.0;   // C(-s, k)
  Complex dc = 0.0;  // d/ds C(-s, k)
  Complex x_pow = 1.0;
  Complex tail = 0.0;
  double last = std::numeric_limits<double>::infinity();
  double before = last;
  bool converged = false;
  for (int k = 0; k <= kMaxStirlingOrder; ++k) {
    const Complex f = power_geometric_sum(k, lambda);
    const Complex t = (Deriv ? (dc - lx * c) : c) * f * x_pow;
    tail += t;
    before = last;
    last = std::abs(t);
    // F_k vanishes for some k (all even k >= 2 at lambda = -1), so two
    // consecutive terms must be small.
    if (k >= 2 && std::max(last, before) <= 1e-17 * std::abs(tail)) {
      converged = true;
      break;
    }
    const Complex step = (-s - static_cast<double>(k)) / static_cast<double>(k + 1);
    dc = dc * step - c / static_cast<double>(k + 1);
    c *= step;
    x_pow /= x;
  }
  const Complex total = sum + lam_pow * xs * tail;
  const double err = std::abs(xs) * std::max(last, before) + 4.0 * kEps * (magnitude + std::abs(xs * tail));
  if (!converged && err > cfg.rel_tol * std::abs(total)) {
    throw ConvergenceError(std::string(what) + ": tail expansion did not settle", total, err);
  }
  return {total, err, Method::series};
}

void require_circle_strip(LambdaParam lambda, Complex s, const char* what) {
  if (!(lambda.modulus() < 1.0) && !(s.real() > 0.0)) {
    throw DomainError(std::string(what) + ": |lambda| = 1 requires Re(s) > 0");
  }
}

// F_q(lambda) = sum_n n^q lambda^n for q = 0..count-1.
std::vector<Complex> power_sums(int count, Complex lambda) {
  std::vector<Complex> out(count);
  for (int q = 0; q < count; ++q) out[q] = power_geometric_sum(q, lambda);
  return out;
}

}  // namespace

EvalResult lerch_phi(LambdaParam lambda, Complex s, AParam a, const LerchConfig& cfg) {
  require_circle_strip(lambda, s, "lerch_phi");
  const Complex av = a.value();
  if (!(lambda.modulus() < 1.0)) return unit_circle_series<false>(lambda.value(), s, av, cfg, "lerch_phi");
  return sum_weighted_series(
      lambda.value(), a.re(), cfg,
      [&](long n, Complex lam_pow) { return lam_pow * std::exp(-s * std::log(static_cast<double>(n) + av)); },
      "lerch_phi");
}

EvalResult lerch_phi_sderiv(LambdaParam lambda, Complex s, AParam a, const LerchConfig& cfg) {
  require_circle_strip(lambda, s, "lerch_phi_sderiv");
  const Complex av = a.value();
  if (!(lambda.modulus() < 1.0)) return unit_circle_series<true>(lambda.value(), s, av, cfg, "lerch_phi_sderiv");
  return sum_weighted_series(
      lambda.value(), a.re() + 1.0, cfg,
      [&](long n, Complex lam_pow) {
        const Complex lg = std::log(static_cast<double>(n) + av);
        return -lam_pow * lg * std::exp(-s * lg);
      },
      "lerch_phi_sderiv");
}

Complex power_geometric_sum(int q, Complex mu) {
  return geometric_poly(q, mu / (1.0 - mu)) / (1.0 - mu);
}

Complex lerch_phi_neg(LambdaParam lambda, int m, AParam a) {
  lambda.require_inside_disc("lerch_phi_neg");
  if (m < 0) throw DomainError("lerch_phi_neg: negative order");
  if (m > kMaxNegOrder) throw OrderTooLargeError("lerch_phi_neg: order exceeds 30");
  const Complex lam = lambda.value();
  const Complex x = lam / (1.0 - lam);
  const Complex av = a.value();
  Complex acc = 0.0;
  for (int j = 0; j <= m; ++j) acc += choose(m, j) * std::pow(av, m - j) * geometric_poly(j, x);
  return acc / (1.0 - lam);
}

EvalResult l_derivative(int p, LambdaParam lambda, AParam a, const LerchConfig& cfg) {
  lambda.require_inside_disc("l_derivative");
  if (p < 0) throw DomainError("l_derivative: negative order");
  const Complex av = a.value();
  const Complex lam = lambda.value();
  // -sum_{n>=p} n(n-1)...(n-p+1) lambda^(n-p) log(n + a), re-indexed from k = n - p.
  return sum_weighted_series(
      lam, a.re() + 1.0, cfg,
      [&](long k, Complex lam_pow) {
        double falling = 1.0;
        for (int i = 0; i < p; ++i) falling *= static_cast<double>(k + p - i);
        return -falling * lam_pow * std::log(static_cast<double>(k + p) + av);
      },
      "l_derivative");
}

EvalResult l_function(LambdaParam lambda, AParam a, LMethod method) {
  lambda.require_inside_disc("l_function");
  if (method == LMethod::series) return l_derivative(0, lambda, a);
  const Complex lam = lambda.value();
  const Complex av = a.value();
  EvalResult r = real_axis_quadrature([&](double t) { return lerch_kernel(0, lam, av, t); }, 1e-13);
  return r;
}

Complex lambda_derivative_operator(int q, Complex lambda, const std::function<Complex(int, Complex)>& derivative) {
  if (q < 0) throw DomainError("lambda_derivative_operator: negative order");
  if (q > kMaxSDerivOrder) throw OrderTooLargeError("lambda_derivative_operator: order exceeds 12");
  Complex acc = 0.0;
  Complex lam_pow = 1.0;
  for (int p = 0; p <= q; ++p) {
    const double st = stirling2_real(q, p);
    if (st != 0.0) acc += st * lam_pow * derivative(p, lambda);
    lam_pow *= lambda;
  }
  return acc;
}

Complex lerch_kernel(int m, Complex lambda, Complex a, double t) {
  if (t < kKernelPatch) {
    // h_q(t) = e^{-at} F_q(lambda e^{-t}) - e^{-t} F_q(lambda) has
    // h_q^(k)(0) = (-1)^k [sum_j C(k,j) a^(k-j) F_{q+j}(lambda) - F_q(lambda)].
    const int terms = std::min(20, kMaxStirlingOrder - m);
    const std::vector<Complex> f = power_sums(m + terms + 1, lambda);
    Complex acc = 0.0;
    for (int q = 0; q <= m; ++q) {
      const Complex weight = choose(m, q) * std::pow(a, m - q);
      Complex series = 0.0;
      double tk = 1.0;  // t^(k-1) / k!
      for (int k = 1; k <= terms; ++k) {
        tk /= k;
        Complex deriv = -f[q];
        Complex a_pow = 1.0;
        for (int j = k; j >= 0; --j) {
          deriv += choose(k, j) * a_pow * f[q + j];
          a_pow *= a;
        }
        if (k % 2 == 1) deriv = -deriv;
        series += deriv * tk;
        tk *= t;
      }
      acc += weight * series;
    }
    return acc;
  }
  const Complex shifted = lambda * std::exp(-t);
  const Complex e_at = std::exp(-a * t);
  const double e_t = std::exp(-t);
  Complex acc = 0.0;
  for (int q = 0; q <= m; ++q) {
    const Complex bracket = e_at * power_geometric_sum(q, shifted) - e_t * power_geometric_sum(q, lambda);
    acc += choose(m, q) * std::pow(a, m - q) * bracket;
  }
  return acc / t;
}

EvalResult lerch_phi_sderiv_neg(LambdaParam lambda, int m, AParam a, SDerivMethod method) {
  lambda.require_inside_disc("lerch_phi_sderiv_neg");
  if (m < 0) throw DomainError("lerch_phi_sderiv_neg: negative order");
  if (m > kMaxSDerivOrder) throw OrderTooLargeError("lerch_phi_sderiv_neg: order exceeds 12");
  const Complex lam = lambda.value();
  const Complex av = a.value();

  if (method == SDerivMethod::kernel_integral) {
    EvalResult r = real_axis_quadrature([&](double t) { return lerch_kernel(m, lam, av, t); }, 1e-13);
    return r;
  }

  std::vector<EvalResult> derivs;
  derivs.reserve(m + 1);
  for (int p = 0; p <= m; ++p) derivs.push_back(l_derivative(p, lambda, a));
  Complex acc = 0.0;
  double err = 0.0;
  for (int q = 0; q <= m; ++q) {
    const Complex weight = choose(m, q) * std::pow(av, m - q);
    const Complex theta_q =
        lambda_derivative_operator(q, lam, [&](int p, Complex) { return derivs[p].value; });
    acc += weight * theta_q;
    double theta_err = 0.0;
    for (int p = 0; p <= q; ++p) theta_err += stirling2_real(q, p) * std::pow(std::abs(lam), p) * derivs[p].abs_err;
    err += std::abs(weight) * theta_err;
  }
  return {acc, err + 4.0 * kEps * std::abs(acc), Method::series};
}

}  // namespace zetasum

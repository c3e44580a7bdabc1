#include "zetasum/integrals.hpp"

#include <cmath>
#include <string>

#include "zetasum/quadrature.hpp"
#include "zetasum/series.hpp"
#include "zetasum/special_core.hpp"

namespace zetasum {
namespace {

double choose(int n, int k) { return static_cast<double>(binomial(n, k)); }

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

double alternating(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

// The segment [a, a + t] stays in Re > 0 exactly when Re(a + t) > 0.
void require_path(AParam a, Complex t, const char* what) {
  if (!(a.re() + t.real() > 0.0) || !is_finite(t)) throw DomainError(std::string(what) + ": requires Re(a + t) > 0");
}

void require_moment(const MomentQuery& q, const char* what) {
  require_path(q.a, q.t, what);
  if (q.m < 0) throw DomainError(std::string(what) + ": negative moment order");
  if (q.m > kMaxMomentOrder) throw OrderTooLargeError(std::string(what) + ": moment order exceeds 20");
}

// int_0^t s^j log Gamma(s) ds for real t > 0: the moment formula with a -> 0+,
// where g(n, 0+) = g(n, 1) for n >= 1 because the a^n log a terms vanish.
Complex moment_from_zero(int j, double t) {
  const Constants& c = constants();
  const AParam at(t);
  Complex acc = -c.gamma * std::pow(t, j + 2) / (j + 2) + (c.log_sqrt_2pi + 0.5 * c.gamma) * std::pow(t, j + 1) / (j + 1);
  for (int i = 0; i <= j; ++i) acc += alternating(i) / (i + 1) * choose(j, i) * std::pow(t, j - i) * g(i + 1, at).value;
  return acc - alternating(j) / (j + 1) * g(j + 1, AParam(1.0)).value;
}

QuadratureConfig tight() {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-13;
  cfg.abs_tol = 1e-15;
  return cfg;
}

}  // namespace

Complex log_gamma_moment(const MomentQuery& q) {
  require_moment(q, "log_gamma_moment");
  const Complex t = q.t;
  if (t == Complex(0.0, 0.0)) return 0.0;
  const Complex a = q.a.value();
  const int m = q.m;
  const Constants& c = constants();
  const AParam shifted(a + t);
  Complex acc = -c.gamma * std::pow(t, m + 2) / static_cast<double>(m + 2) +
                (c.log_sqrt_2pi - c.gamma * (a - 0.5)) * std::pow(t, m + 1) / static_cast<double>(m + 1);
  for (int k = 0; k <= m; ++k) acc += alternating(k) / (k + 1) * choose(m, k) * std::pow(t, m - k) * g(k + 1, shifted).value;
  return acc - alternating(m) / (m + 1) * g(m + 1, q.a).value;
}

Complex log_gamma_integral_m0(const MomentQuery& q, M0Form form) {
  if (q.m != 0) throw DomainError("log_gamma_integral_m0: requires m = 0");
  require_moment(q, "log_gamma_integral_m0");
  const Complex t = q.t;
  if (t == Complex(0.0, 0.0)) return 0.0;
  const Complex a = q.a.value();
  const AParam shifted(a + t);
  const Constants& c = constants();
  const Complex poly = -0.5 * t * t + (c.log_sqrt_2pi - a + 0.5) * t;
  switch (form) {
    case M0Form::g_form:
      return -c.gamma * t * t / 2.0 + (c.log_sqrt_2pi - c.gamma * (a - 0.5)) * t + g(1, shifted).value - g(1, q.a).value;
    case M0Form::zeta_form:
      return poly + hurwitz_zeta_sderiv(-1.0, shifted).value - hurwitz_zeta_sderiv(-1.0, q.a).value;
    case M0Form::barnes_form:
      return poly + (a + t - 1.0) * log_gamma(a + t).value - barnes_log_g(shifted).value -
             (a - 1.0) * log_gamma(a).value + barnes_log_g(q.a).value;
  }
  throw DomainError("log_gamma_integral_m0: unknown form");
}

Complex psi_moment(Complex t, AParam a, int p) {
  if (p < 1) throw DomainError("psi_moment: p must be >= 1");
  SeriesQuery q;
  q.t = t;
  q.a = a;
  q.p = p;
  const Complex s = s_closed(q);
  return digamma(a.value()).value * std::pow(t, p) / static_cast<double>(p) - s;
}

Complex negative_polygamma(int k, double t) {
  if (!(t > 0.0)) throw DomainError("negative_polygamma: requires t > 0");
  if (k < 1) throw DomainError("negative_polygamma: order k must be >= 1");
  if (k > kMaxNegativePolygammaOrder) throw OrderTooLargeError("negative_polygamma: order k exceeds 10");
  if (k == 1) return log_gamma(t).value;
  const int d = k - 2;
  Complex acc = 0.0;
  for (int j = 0; j <= d; ++j) acc += choose(d, j) * std::pow(t, d - j) * alternating(j) * moment_from_zero(j, t);
  return acc / factorial(d);
}

Complex g_integral_rule(int m, AParam a, Complex t) {
  if (m < 1) throw DomainError("g_integral_rule: m must be >= 1");
  require_path(a, t, "g_integral_rule");
  if (t == Complex(0.0, 0.0)) return 0.0;
  return (g(m, AParam(a.value() + t)).value - g(m, a).value) / static_cast<double>(m);
}

EvalResult log_gamma_moment_quadrature(const MomentQuery& q) {
  require_moment(q, "log_gamma_moment_quadrature");
  const Complex a = q.a.value();
  return integrate_segment([&](Complex s) { return std::pow(s, q.m) * log_gamma(a + s).value; }, 0.0, q.t, tight());
}

EvalResult psi_moment_quadrature(Complex t, AParam a, int p) {
  if (p < 1) throw DomainError("psi_moment_quadrature: p must be >= 1");
  if (!(std::abs(t) < a.re())) throw DomainError("psi_moment_quadrature: requires |t| < Re(a)");
  const Complex av = a.value();
  return integrate_segment([&](Complex s) { return std::pow(s, p - 1) * digamma(av - s).value; }, 0.0, t, tight());
}

EvalResult negative_polygamma_quadrature(int k, double t) {
  if (!(t > 0.0)) throw DomainError("negative_polygamma_quadrature: requires t > 0");
  if (k < 1 || k > kMaxNegativePolygammaOrder) throw DomainError("negative_polygamma_quadrature: k out of range");
  if (k == 1) return log_gamma(t);
  const int d = k - 2;
  // The log singularity of log Gamma at s = 0 is absorbed by adaptive bisection.
  EvalResult r = integrate_interval(
      [&](double s) { return std::pow(t - s, d) * log_gamma(s).value; }, 0.0, t, tight());
  r.value /= factorial(d);
  r.abs_err /= factorial(d);
  return r;
}

EvalResult g_integral_quadrature(int m, AParam a, Complex t) {
  if (m < 1) throw DomainError("g_integral_quadrature: m must be >= 1");
  require_path(a, t, "g_integral_quadrature");
  const Complex av = a.value();
  return integrate_segment([&](Complex s) { return g(m - 1, AParam(av + s)).value; }, 0.0, t, tight());
}

}  // namespace zetasum

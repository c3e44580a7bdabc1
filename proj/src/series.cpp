#include "zetasum/series.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "zetasum/lerch.hpp"
#include "zetasum/special_core.hpp"

namespace zetasum {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_radius(const SeriesQuery& q, const char* what) {
  if (!(std::abs(q.t) < q.a.re())) throw DomainError(std::string(what) + ": requires |t| < Re(a)");
}

void require_order(int p, int min, int max, const char* what) {
  if (p < min) throw DomainError(std::string(what) + ": order p must be >= " + std::to_string(min));
  if (p > max) throw OrderTooLargeError(std::string(what) + ": order p exceeds " + std::to_string(max));
}

double choose(int n, int k) { return static_cast<double>(binomial(n, k)); }

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Complex psi(Complex s) { return digamma(s).value; }

// Phi'_s(lambda, -m, b) + psi(m + 1) Phi(lambda, -m, b).
Complex lerch_g(LambdaParam lambda, int m, AParam b) {
  return lerch_phi_sderiv_neg(lambda, m, b, SDerivMethod::l_derivatives).value + psi_int(m) * lerch_phi_neg(lambda, m, b);
}

}  // namespace

Complex s_closed_p1(Complex t, AParam a) {
  const Complex av = a.value();
  return t * psi(av) + log_gamma(av - t).value - log_gamma(av).value;
}

Complex s_closed(const SeriesQuery& q) {
  require_radius(q, "s_closed");
  require_order(q.p, 0, kMaxSeriesOrder, "s_closed");
  const Complex a = q.a.value();
  const Complex t = q.t;
  if (t == Complex(0.0, 0.0)) return 0.0;
  if (q.p == 0) return psi(a) - psi(a - t);
  const AParam shifted(a - t);
  const int p = q.p;
  Complex acc = std::pow(t, p) / static_cast<double>(p) * (psi(a) + constants().gamma);
  for (int k = 0; k < p; ++k) acc += choose(p - 1, k) * g(k, shifted).value * std::pow(t, p - 1 - k);
  return acc - g(p - 1, q.a).value;
}

Complex t_closed(const SeriesQuery& q) {
  require_radius(q, "t_closed");
  require_order(q.p, 1, kMaxSeriesOrder, "t_closed");
  const Complex a = q.a.value();
  const Complex t = q.t;
  if (t == Complex(0.0, 0.0)) return 0.0;
  const int p = q.p;
  Complex acc = std::pow(t, p) / factorial(p) * (psi(a) + constants().gamma);
  Complex inner = 0.0;
  for (int k = 0; k < p; ++k) {
    const double sign = k % 2 == 0 ? -1.0 : 1.0;
    inner += sign * choose(p - 1, k) * g(k, q.a).value * std::pow(t, p - k - 1);
  }
  acc += inner / factorial(p - 1);
  // The final term carries g(p - 1, a - t) / (p - 1)!.
  const double sign = p % 2 == 0 ? 1.0 : -1.0;
  return acc - sign / factorial(p - 1) * g(p - 1, AParam(a - t)).value;
}

Complex lerch_series_closed(const SeriesQuery& q) {
  if (!q.lambda) throw DomainError("lerch_series_closed: lambda is required");
  const LambdaParam lambda = *q.lambda;
  lambda.require_inside_disc("lerch_series_closed");
  require_radius(q, "lerch_series_closed");
  require_order(q.p, 0, 13, "lerch_series_closed");
  const Complex a = q.a.value();
  const Complex t = q.t;
  const AParam shifted(a - t);
  if (q.p == 0) return lerch_phi(lambda, 1.0, shifted).value;
  if (t == Complex(0.0, 0.0)) return 0.0;
  const int p = q.p;
  Complex acc = 0.0;
  for (int k = 0; k < p; ++k) acc += choose(p - 1, k) * lerch_g(lambda, k, shifted) * std::pow(t, p - 1 - k);
  return acc - lerch_g(lambda, p - 1, q.a);
}

EvalResult series_bruteforce(SeriesFamily family, const SeriesQuery& q, const SeriesConfig& cfg) {
  require_radius(q, "series_bruteforce");
  if (cfg.max_terms < 10) throw DomainError("series_bruteforce: max_terms must be at least 10");
  const int p = q.p;
  if (family == SeriesFamily::T) {
    require_order(p, 1, kMaxSeriesOrder, "series_bruteforce");
  } else {
    require_order(p, 0, kMaxSeriesOrder, "series_bruteforce");
  }
  if (family == SeriesFamily::LERCH && !q.lambda) throw DomainError("series_bruteforce: lambda is required");
  const Complex t = q.t;
  if (t == Complex(0.0, 0.0) && !(family == SeriesFamily::LERCH && p == 0)) return {0.0, 0.0, Method::series};

  const double ra = q.a.re();
  const double rho = std::abs(t) / ra;
  const long first = family == SeriesFamily::LERCH ? 0 : 1;
  Complex sum = 0.0;
  double coeff_err = 0.0;
  double tail = std::numeric_limits<double>::infinity();
  for (long n = first; n < first + cfg.max_terms; ++n) {
    const Complex s(static_cast<double>(n + 1), 0.0);
    const EvalResult c = family == SeriesFamily::LERCH ? lerch_phi(*q.lambda, s, q.a) : hurwitz_zeta(s, q.a);
    // Weight t^(n+p) / d_n with d_n = n + p (S, LERCH), (n+1)...(n+p) (T), and
    // the plain power t^n at p = 0.
    double denom = 1.0;
    if (family == SeriesFamily::T) {
      for (int i = 1; i <= p; ++i) denom *= static_cast<double>(n + i);
    } else if (p > 0) {
      denom = static_cast<double>(n + p);
    }
    const Complex weight = std::pow(t, static_cast<double>(n + p)) / denom;
    sum += c.value * weight;
    coeff_err += c.abs_err * std::abs(weight);
    if (n >= 1) {
      // Remaining terms m > n: |c_m| |t|^(m+p) / d_m <= (1 + Re a / (n+1)) / Re a
      // |t|^p rho^m / d_{n+1}, summed geometrically.
      double next_denom = 1.0;
      if (family == SeriesFamily::T) {
        for (int i = 1; i <= p; ++i) next_denom *= static_cast<double>(n + 1 + i);
      } else if (p > 0) {
        next_denom = static_cast<double>(n + 1 + p);
      }
      tail = (1.0 + ra / (n + 1)) / ra * std::pow(std::abs(t), p) * std::pow(rho, n + 1) / (1.0 - rho) / next_denom;
      if (tail <= cfg.rel_tol * std::abs(sum) || tail < 1e-300) {
        return {sum, tail + coeff_err + 4.0 * kEps * std::abs(sum), Method::series};
      }
    }
  }
  throw ConvergenceError("series_bruteforce: term budget of " + std::to_string(cfg.max_terms) + " exhausted", sum,
                         tail + coeff_err);
}

}  // namespace zetasum

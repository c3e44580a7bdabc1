#include "zetasum/special_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace zetasum {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

using Rational = boost::multiprecision::cpp_rational;

// Akiyama-Tanigawa in exact rational arithmetic. The recurrence produces
// B_1 = +1/2; the sign is flipped afterwards so that B_n(x) has B_1 = -1/2.
std::array<long double, kMaxBernoulliOrder + 1> build_bernoulli() {
  std::array<long double, kMaxBernoulliOrder + 1> out{};
  std::array<Rational, kMaxBernoulliOrder + 1> row;
  for (int m = 0; m <= kMaxBernoulliOrder; ++m) {
    row[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) row[j - 1] = j * (row[j - 1] - row[j]);
    out[m] = row[0].convert_to<long double>();
  }
  out[1] = -out[1];
  return out;
}

const std::array<long double, kMaxBernoulliOrder + 1>& bernoulli_table() {
  static const auto table = build_bernoulli();
  return table;
}

// B_{2j} / (2j)! for j = 0..30.
const std::array<long double, kMaxBernoulliOrder / 2 + 1>& em_coefficients() {
  static const auto table = [] {
    std::array<long double, kMaxBernoulliOrder / 2 + 1> c{};
    long double fact = 1.0L;
    for (int k = 0; k <= kMaxBernoulliOrder; ++k) {
      if (k > 0) fact *= k;
      if (k % 2 == 0) c[k / 2] = bernoulli_table()[k] / fact;
    }
    return c;
  }();
  return table;
}

using u128 = unsigned __int128;

const std::array<std::array<u128, kMaxStirlingOrder + 1>, kMaxStirlingOrder + 1>& stirling_table() {
  static const auto table = [] {
    std::array<std::array<u128, kMaxStirlingOrder + 1>, kMaxStirlingOrder + 1> t{};
    t[0][0] = 1;
    for (int n = 0; n < kMaxStirlingOrder; ++n)
      for (int k = 1; k <= n + 1; ++k) t[n + 1][k] = static_cast<u128>(k) * t[n][k] + t[n][k - 1];
    return t;
  }();
  return table;
}

void check_stirling_args(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("stirling2: negative argument");
  if (n > kMaxStirlingOrder)
    throw OverflowError("stirling2: n = " + std::to_string(n) + " exceeds the tabulated ceiling 40");
}

bool is_nonpositive_integer(Complex s) { return is_integer(s) && s.real() <= 0.0; }

Complex cpow(Complex base_log, Complex exponent) { return std::exp(exponent * base_log); }

using LComplex = std::complex<long double>;
constexpr long double kEpsLong = std::numeric_limits<long double>::epsilon();

LComplex widen(Complex z) { return {z.real(), z.imag()}; }
Complex narrow(LComplex z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

// Euler-Maclaurin evaluation of zeta(s, a) (Deriv = false) or d/ds zeta(s, a)
// (Deriv = true) with shift N and at most j_max corrections. Accumulates in
// extended precision: for Re(s) < 0 the partial sum and the x^(1-s)/(s-1)
// term cancel.
struct EmOutcome {
  Complex value;
  double truncation;
  double rounding;
  bool converged;
};

template <bool Deriv>
EmOutcome euler_maclaurin(Complex s_in, Complex a_in, int shift, int j_max, bool adaptive) {
  const LComplex s = widen(s_in);
  const LComplex a = widen(a_in);
  long double magnitude = 0.0L;
  LComplex sum = 0.0L;
  for (int n = 0; n < shift; ++n) {
    const LComplex lg = std::log(static_cast<long double>(n) + a);
    const LComplex term = Deriv ? -lg * std::exp(-s * lg) : std::exp(-s * lg);
    sum += term;
    magnitude += std::abs(term);
  }
  const LComplex one = 1.0L;
  const LComplex x = static_cast<long double>(shift) + a;
  const LComplex lx = std::log(x);
  const LComplex x1s = std::exp((one - s) * lx);  // x^(1-s)
  const LComplex xs = std::exp(-s * lx);          // x^(-s)
  LComplex tail;
  if constexpr (Deriv) {
    tail = -lx * x1s / (s - one) - x1s / ((s - one) * (s - one)) - 0.5L * lx * xs;
  } else {
    tail = x1s / (s - one) + 0.5L * xs;
  }
  sum += tail;
  magnitude += std::abs(tail);

  const auto& coef = em_coefficients();
  const LComplex inv_x2 = one / (x * x);
  LComplex power = xs / x;  // x^(1 - s - 2j) for j = 1
  LComplex rising = s;      // (s)_{2j-1}
  LComplex rising_d = one;  // d/ds (s)_{2j-1}
  long double prev = std::numeric_limits<long double>::infinity();
  long double truncation = 0.0L;
  bool converged = false;
  for (int j = 1; j <= j_max + 1; ++j) {
    const LComplex term = Deriv ? coef[j] * power * (rising_d - lx * rising) : coef[j] * power * rising;
    const long double size = std::abs(term);
    if (j == j_max + 1) {
      // first omitted term
      truncation = size;
      converged = size <= 1e-16L * std::abs(sum) || size == 0.0L;
      break;
    }
    if (adaptive && size > prev) {
      truncation = prev;
      converged = false;
      break;
    }
    sum += term;
    magnitude += size;
    if (adaptive && size <= 1e-19L * std::abs(sum)) {
      truncation = size;
      converged = true;
      break;
    }
    prev = size;
    const LComplex f1 = s + static_cast<long double>(2 * j - 1);
    const LComplex f2 = s + static_cast<long double>(2 * j);
    const LComplex q = f1 * f2;
    rising_d = rising_d * q + rising * (f1 + f2);
    rising *= q;
    power *= inv_x2;
  }
  const Complex value = narrow(sum);
  const double rounding = static_cast<double>(4.0L * kEpsLong * magnitude) + kEps * std::abs(value);
  return {value, static_cast<double>(truncation), rounding, converged};
}

template <bool Deriv>
bool try_direct_series(Complex s, Complex a, double margin, EvalResult& out) {
  const double sigma = s.real();
  if (!(sigma > 1.0 + margin)) return false;
  const double ra = a.real();
  Complex sum = 0.0;
  constexpr int kMaxTerms = 200;
  for (int n = 0; n < kMaxTerms; ++n) {
    const Complex lg = std::log(static_cast<double>(n) + a);
    sum += Deriv ? -lg * cpow(lg, -s) : cpow(lg, -s);
    const int next = n + 1;
    const double base = next - 1 + ra;
    const double twist = std::exp(std::abs(s.imag()) * std::abs(std::arg(static_cast<double>(next) + a)));
    double bound;
    if constexpr (Deriv) {
      if (base < 1.0) continue;
      bound = twist * (2.0 / std::numbers::e + kPi / 2.0) * std::pow(base, 1.5 - sigma) / (sigma - 1.5);
    } else {
      bound = twist * std::pow(base, 1.0 - sigma) / (sigma - 1.0);
    }
    if (bound <= 1e-17 * std::abs(sum)) {
      out = {sum, bound + 4.0 * kEps * std::abs(sum), Method::series};
      return true;
    }
  }
  return false;
}

template <bool Deriv>
EvalResult zeta_impl(Complex s, AParam ap, const EulerMaclaurinConfig& cfg) {
  const Complex a = ap.value();
  if (!is_finite(s)) throw DomainError("hurwitz_zeta: non-finite s");
  if (s == Complex(1.0, 0.0)) throw PoleError("hurwitz_zeta: pole at s = 1");

  EvalResult direct;
  if (try_direct_series<Deriv>(s, a, cfg.direct_margin, direct)) return direct;

  // zeta(-n, a) is a polynomial in a: with no shift the correction series
  // terminates after (n + 1) / 2 terms and is exact.
  if (!Deriv && is_nonpositive_integer(s) && s.real() >= -(kMaxBernoulliOrder - 1)) {
    const int n = static_cast<int>(-s.real());
    const EmOutcome r = euler_maclaurin<false>(s, a, 0, n / 2 + 1, false);
    return {r.value, r.rounding, Method::euler_maclaurin};
  }

  if (s.real() >= 0.0 || !cfg.adaptive) {
    const int order = std::min(cfg.order, kMaxBernoulliOrder / 2 - 1);
    const double needed = std::abs(s + static_cast<double>(2 * order - 1)) / (2.0 * kPi) - a.real();
    const int shift = std::max(cfg.shift, static_cast<int>(std::ceil(needed)) + 1);
    const EmOutcome r = euler_maclaurin<Deriv>(s, a, shift, order, false);
    return {r.value, 2.0 * r.truncation + r.rounding, Method::euler_maclaurin};
  }

  // Left half-plane: the explicit partial sum cancels against the
  // x^(1-s)/(s-1) term, so keep x = N + a small and lean on the corrections.
  const double x_target = 6.0 + std::abs(s.imag()) / kPi;
  int shift = std::max(0, static_cast<int>(std::ceil(x_target - a.real())));
  EmOutcome best{};
  double best_err = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt < 12; ++attempt, shift += 4) {
    const EmOutcome r = euler_maclaurin<Deriv>(s, a, shift, kMaxBernoulliOrder / 2 - 1, true);
    const double err = r.truncation + r.rounding;
    if (err < best_err) {
      best = r;
      best_err = err;
    }
    if (r.converged) break;
  }
  return {best.value, best_err, Method::euler_maclaurin};
}

}  // namespace

double bernoulli_number(int n) {
  if (n < 0) throw DomainError("bernoulli_number: negative order");
  if (n > kMaxBernoulliOrder)
    throw OrderTooLargeError("bernoulli: order " + std::to_string(n) + " exceeds the ceiling 60");
  return static_cast<double>(bernoulli_table()[n]);
}

Complex bernoulli_poly(int n, Complex x) {
  if (n < 0) throw DomainError("bernoulli_poly: negative order");
  if (n > kMaxBernoulliOrder)
    throw OrderTooLargeError("bernoulli_poly: order " + std::to_string(n) + " exceeds the ceiling 60");
  // Horner in x over sum_k C(n, k) B_k x^(n - k).
  Complex acc = 0.0;
  double binom = 1.0;  // C(n, k)
  for (int k = 0; k <= n; ++k) {
    acc = acc * x + binom * static_cast<double>(bernoulli_table()[k]);
    binom = binom * (n - k) / (k + 1);
  }
  return acc;
}

std::uint64_t stirling2(int n, int k) {
  check_stirling_args(n, k);
  if (k > n) return 0;
  const u128 v = stirling_table()[n][k];
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw OverflowError("stirling2: {" + std::to_string(n) + " " + std::to_string(k) +
                        "} does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

double stirling2_real(int n, int k) {
  check_stirling_args(n, k);
  if (k > n) return 0.0;
  return static_cast<double>(stirling_table()[n][k]);
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > 60) throw OrderTooLargeError("binomial: n must lie in [0, 60]");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

Complex geometric_poly(int n, Complex x) {
  check_stirling_args(n, 0);
  Complex acc = 0.0;
  for (int k = n; k >= 0; --k) {
    double coeff = stirling2_real(n, k);
    for (int i = 2; i <= k; ++i) coeff *= i;
    acc = acc * x + coeff;
  }
  return acc;
}

double psi_int(int n) {
  if (n < 0) throw DomainError("psi_int: negative argument");
  double harmonic = 0.0;
  for (int k = n; k >= 1; --k) harmonic += 1.0 / k;
  return -literal::euler_gamma + harmonic;
}

EvalResult digamma(Complex s_in) {
  if (!is_finite(s_in)) throw DomainError("digamma: non-finite argument");
  if (is_nonpositive_integer(s_in)) throw PoleError("digamma: pole at a nonpositive integer");

  LComplex s = widen(s_in);
  LComplex reflection = 0.0L;
  if (s.real() < 0.0L) {
    // psi(s) = psi(1 - s) - pi cot(pi s)
    reflection = -std::numbers::pi_v<long double> / std::tan(std::numbers::pi_v<long double> * s);
    s = 1.0L - s;
  }
  LComplex shift_sum = 0.0L;
  long double magnitude = std::abs(reflection);
  while (s.real() < 10.0L || std::abs(s) < 12.0L) {
    shift_sum -= 1.0L / s;
    magnitude += std::abs(1.0L / s);
    s += 1.0L;
  }
  const LComplex inv2 = 1.0L / (s * s);
  LComplex series = std::log(s) - 0.5L / s;
  LComplex power = inv2;
  long double last = 0.0L;
  for (int k = 1; k <= 12; ++k) {
    const LComplex term = bernoulli_table()[2 * k] / (2.0L * k) * power;
    series -= term;
    last = std::abs(term);
    if (last < 1e-20L * std::abs(series)) break;
    power *= inv2;
  }
  magnitude += std::abs(series);
  const Complex value = narrow(reflection + shift_sum + series);
  return {value, static_cast<double>(last + 4.0L * kEpsLong * magnitude) + kEps * std::abs(value),
          Method::series};
}

EvalResult log_gamma(Complex s_in) {
  if (!is_finite(s_in)) throw DomainError("log_gamma: non-finite argument");
  if (is_nonpositive_integer(s_in)) throw PoleError("log_gamma: pole at a nonpositive integer");

  if (s_in.real() <= 0.0) {
    // log Gamma(s) = log pi - log sin(pi s) - log Gamma(1 - s)
    const EvalResult mirrored = log_gamma(1.0 - s_in);
    const Complex value = std::log(kPi) - std::log(std::sin(kPi * s_in)) - mirrored.value;
    return {value, mirrored.abs_err + 4.0 * kEps * std::abs(value), Method::series};
  }

  // Shift to Re(s) >= 12. The product of the shifted factors is logged once;
  // the 2 pi i multiple is recovered from the summed arguments so the result
  // stays on the branch that is real on the positive axis.
  LComplex s = widen(s_in);
  LComplex product = 1.0L;
  long double arg_sum = 0.0L;
  while (s.real() < 12.0L || std::abs(s) < 14.0L) {
    product *= s;
    arg_sum += std::arg(s);
    s += 1.0L;
  }
  LComplex shift_log = std::log(product);
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  shift_log += LComplex(0.0L, two_pi * std::nearbyint((arg_sum - shift_log.imag()) / two_pi));

  const LComplex ls = std::log(s);
  LComplex series = (s - 0.5L) * ls - s + 0.918938533204672741780329736405617639861L;
  const long double magnitude = std::abs(series) + std::abs(shift_log);
  const LComplex inv2 = 1.0L / (s * s);
  LComplex power = 1.0L / s;
  long double last = 0.0L;
  for (int k = 1; k <= 12; ++k) {
    const LComplex term = bernoulli_table()[2 * k] / (2.0L * k * (2.0L * k - 1.0L)) * power;
    series += term;
    last = std::abs(term);
    if (last < 1e-20L * std::abs(series)) break;
    power *= inv2;
  }
  const Complex value = narrow(series - shift_log);
  return {value, static_cast<double>(last + 4.0L * kEpsLong * magnitude) + kEps * std::abs(value),
          Method::series};
}

EvalResult hurwitz_zeta(Complex s, AParam a, const EulerMaclaurinConfig& cfg) {
  return zeta_impl<false>(s, a, cfg);
}

EvalResult hurwitz_zeta_sderiv(Complex s, AParam a, const EulerMaclaurinConfig& cfg) {
  return zeta_impl<true>(s, a, cfg);
}

Complex zeta_neg_int(int n, AParam a) {
  if (n < 0) throw DomainError("zeta_neg_int: negative order");
  return -bernoulli_poly(n + 1, a.value()) / static_cast<double>(n + 1);
}

GFamilyValue g(int n, AParam a) {
  if (n < 0) throw DomainError("g: negative order");
  const EvalResult d = hurwitz_zeta_sderiv(Complex(-n, 0.0), a);
  const Complex value = d.value + psi_int(n) * zeta_neg_int(n, a);
  return {n, a, value, d.abs_err + 4.0 * kEps * std::abs(value)};
}

EvalResult barnes_log_g(AParam a) {
  const Complex av = a.value();
  const EvalResult lg = log_gamma(av);
  const EvalResult zd = hurwitz_zeta_sderiv(Complex(-1.0, 0.0), a);
  const Complex value = 1.0 / 12.0 - constants().log_glaisher + (av - 1.0) * lg.value - zd.value;
  return {value, std::abs(av - 1.0) * lg.abs_err + zd.abs_err + 4.0 * kEps * std::abs(value),
          Method::closed_form};
}

Complex barnes_poly(Complex a) {
  constexpr double gam = literal::euler_gamma;
  return -0.5 * (1.0 + gam) * a * a + (literal::log_sqrt_2pi + gam + 0.5) * a - 5.0 * gam / 12.0 -
         (literal::log_glaisher + literal::log_sqrt_2pi);
}

Complex barnes_log_g_poly(AParam a) {
  return barnes_poly(a.value()) + (a.value() - 1.0) * g(0, a).value - g(1, a).value;
}

const Constants& constants() {
  static const Constants c = [] {
    Constants out{};
    out.gamma = -digamma(Complex(1.0, 0.0)).value.real();
    out.log_sqrt_2pi = log_gamma(Complex(0.5, 0.0)).value.real() + 0.5 * std::log(2.0);
    out.log_glaisher = 1.0 / 12.0 - hurwitz_zeta_sderiv(Complex(-1.0, 0.0), AParam(1.0)).value.real();
    return out;
  }();
  return c;
}

}  // namespace zetasum

#pragma once

#include <cstdint>

#include "zetasum/types.hpp"

// Elementary special functions and combinatorial tables shared by the rest
// of the library: Bernoulli and geometric polynomials, Stirling numbers,
// digamma, log-gamma, the Hurwitz zeta function with its s-derivative,
// the family g(n, a) = zeta'(-n, a) + psi(n + 1) zeta(-n, a) and Barnes log G.

namespace zetasum {

inline constexpr int kMaxBernoulliOrder = 60;
inline constexpr int kMaxStirlingOrder = 40;

/// Exact Bernoulli number B_n as a double, B_1 = -1/2.
double bernoulli_number(int n);

Complex bernoulli_poly(int n, Complex x);

/// Stirling number of the second kind {n k}. Every entry with n <= 40 is
/// tabulated exactly in 128-bit arithmetic; entries that do not fit in
/// 64 bits (first at n = 27) raise OverflowError. Use stirling2_real for
/// the floating-point value.
std::uint64_t stirling2(int n, int k);
double stirling2_real(int n, int k);

/// Exact binomial coefficient C(n, k) for 0 <= n <= 60; zero when k is
/// outside [0, n].
std::uint64_t binomial(int n, int k);

/// omega_n(x) = sum_k {n k} k! x^k.
Complex geometric_poly(int n, Complex x);

/// psi(n + 1) = -gamma + H_n.
double psi_int(int n);

EvalResult digamma(Complex s);
EvalResult log_gamma(Complex s);

/// Euler-Maclaurin controls. `shift` is the number of explicitly summed
/// terms and `order` the number of Bernoulli corrections used when
/// Re(s) >= 0. With `adaptive` set, Re(s) < 0 uses a smaller shift and as
/// many corrections as needed (up to 30) to limit cancellation.
struct EulerMaclaurinConfig {
  int shift = 20;
  int order = 10;
  bool adaptive = true;
  /// Direct summation of the defining series is tried for Re(s) > 1 + margin.
  double direct_margin = 10.0;
};

EvalResult hurwitz_zeta(Complex s, AParam a, const EulerMaclaurinConfig& cfg = {});

/// d/ds zeta(s, a), by term-wise differentiation of the Euler-Maclaurin sum.
EvalResult hurwitz_zeta_sderiv(Complex s, AParam a, const EulerMaclaurinConfig& cfg = {});

/// zeta(-n, a) = -B_{n+1}(a) / (n + 1).
Complex zeta_neg_int(int n, AParam a);

struct GFamilyValue {
  int n;
  AParam a;
  Complex value;
  double abs_err;
};

GFamilyValue g(int n, AParam a);

/// log G(a) through the Glaisher-Kinkelin relation with zeta'(-1, a).
EvalResult barnes_log_g(AParam a);

/// Polynomial-plus-g form p(a) + (a - 1) g(0, a) - g(1, a) of log G(a).
Complex barnes_log_g_poly(AParam a);

/// The quadratic p(a) of the polynomial-plus-g form.
Complex barnes_poly(Complex a);

struct Constants {
  double gamma;
  double log_sqrt_2pi;
  double log_glaisher;
};

/// Constants derived from the library's own evaluators (computed once).
const Constants& constants();

namespace literal {
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double log_sqrt_2pi = 0.91893853320467274178032973640561764;
inline constexpr double log_glaisher = 0.24875447703378426254725299357611398;
}  // namespace literal

}  // namespace zetasum

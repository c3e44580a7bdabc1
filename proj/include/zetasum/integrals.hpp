#pragma once

#include "zetasum/types.hpp"

// Integrals of log Gamma, digamma and g(n, .) in closed form, with adaptive
// quadrature counterparts. Integrals from 0 to a complex t run along the
// straight segment [0, t]. The log Gamma moments and the g rule need only
// Re(a + t) > 0, which keeps the whole segment [a, a + t] in Re > 0.

namespace zetasum {

inline constexpr int kMaxMomentOrder = 20;
inline constexpr int kMaxNegativePolygammaOrder = 10;

struct MomentQuery {
  Complex t = 0.0;
  AParam a{1.0};
  int m = 0;
};

/// int_0^t s^m log Gamma(a + s) ds.
Complex log_gamma_moment(const MomentQuery& q);

enum class M0Form { g_form, zeta_form, barnes_form };

/// int_0^t log Gamma(a + s) ds through g(1, .), zeta'(-1, .) or log G.
Complex log_gamma_integral_m0(const MomentQuery& q, M0Form form);

/// int_0^t s^(p-1) psi(a - s) ds = psi(a) t^p / p - S(t, a, p).
Complex psi_moment(Complex t, AParam a, int p);

/// Psi^(-1)(t) = log Gamma(t) and, for k >= 2,
/// Psi^(-k)(t) = 1/(k-2)! int_0^t (t - s)^(k-2) log Gamma(s) ds.
Complex negative_polygamma(int k, double t);

/// int_0^t g(m-1, a + s) ds = (g(m, a + t) - g(m, a)) / m.
Complex g_integral_rule(int m, AParam a, Complex t);

// Quadrature counterparts of the closed forms above.
EvalResult log_gamma_moment_quadrature(const MomentQuery& q);
EvalResult psi_moment_quadrature(Complex t, AParam a, int p);
EvalResult negative_polygamma_quadrature(int k, double t);
EvalResult g_integral_quadrature(int m, AParam a, Complex t);

}  // namespace zetasum

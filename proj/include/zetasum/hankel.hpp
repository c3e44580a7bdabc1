#pragma once

#include <string_view>

#include "zetasum/types.hpp"

// Direct quadrature of Hankel-contour representations. The contour wraps the
// negative real axis: the lower edge (arg z = -pi) from -inf to -eps, the
// circle |z| = eps counterclockwise, and the upper edge (arg z = +pi) back to
// -inf. Every function here returns (1/2 pi i) times the contour integral,
// times whatever prefactor the represented quantity needs.

namespace zetasum {

struct ContourSpec {
  double epsilon = 1.0;
  double ray_cutoff = 0.0;  // 0 selects max(40, 40 / decay rate)
  int n_circle = 64;        // Gauss-Legendre nodes on the circle (multiple of n_ray)
  int n_ray = 16;           // Gauss-Legendre nodes per panel, rays and circle
  double tail_tol = 1e-16;
  double tol = 1e-9;        // node-doubling must agree to tol * max(1, |value|)
};

void validate(const ContourSpec& spec);

enum class KindTag {
  I_of_s,
  zeta_cont,
  zeta_neg,
  zeta_pos,
  g_family,
  psi_plus_gamma,
  inv_gamma,
  log_gamma_rep,
  phi_cont,
  phi_one,
  phi_deriv,
  zeta_prime_neg1,
  log_G,
  psi_combined,
  psi_direct,
  gamma_const,
};

std::string_view to_string(KindTag tag);
KindTag kind_from_string(std::string_view name);

/// An integrand of the contour corpus with its parameters. Fields read per tag:
/// s for I_of_s, zeta_cont, phi_cont, inv_gamma, psi_direct; n for zeta_neg,
/// zeta_pos, g_family, phi_deriv; a wherever e^{az} appears, which includes
/// the digamma argument of psi_combined and psi_plus_gamma; lambda for phi_*.
struct IntegrandKind {
  KindTag tag;
  Complex s = 0.0;
  int n = 0;
  Complex a = 1.0;
  Complex lambda = 1.0;
};

/// Contributions of the two pieces, each already divided by 2 pi i.
struct ContourPieces {
  Complex circle;
  Complex rays;
  double epsilon;
  double rounding;  // eps-scaled sum of |weight * integrand|
};

/// Circle radius actually used: the requested one, pulled inside the nearest
/// pole of the denominator (1 - lambda e^z) by min(0.5, d/2) when needed.
double effective_epsilon(const IntegrandKind& kind, const ContourSpec& spec);

/// Single-resolution evaluation; `refine` halves every panel `refine` times.
ContourPieces contour_pieces(const IntegrandKind& kind, const ContourSpec& spec, int refine = 0);

/// (1/2 pi i) times the bare contour integral (no prefactor), with a
/// node-doubling error estimate.
EvalResult contour_integrate(const IntegrandKind& kind, const ContourSpec& spec = {});

enum class ZetaSelector { cont, neg, pos, g, zprime_neg1 };
enum class GammaSelector { psi_combined, psi_direct, psi_plus_gamma, inv_gamma, gamma_const, log_gamma };
enum class LerchSelector { phi_cont, phi_one, phi_deriv };

/// cont: zeta(s, a); neg: zeta(-n, a); pos: zeta(n + 1, a); g: g(n, a);
/// zprime_neg1: zeta'(-1, a).
EvalResult hankel_zeta_family(ZetaSelector which, Complex s_or_n, AParam a, const ContourSpec& spec = {});

/// psi_combined / psi_direct / psi_plus_gamma: psi(x) (+ gamma for the last);
/// inv_gamma: 1 / Gamma(x); gamma_const: Euler's gamma (argument ignored);
/// log_gamma: log Gamma(x).
EvalResult hankel_gamma_family(GammaSelector which, Complex arg, const ContourSpec& spec = {});

/// phi_cont: Phi(lambda, s, a); phi_one: Phi(lambda, 1, a);
/// phi_deriv: Phi'_s(lambda, -n, a) + psi(n + 1) Phi(lambda, -n, a).
EvalResult hankel_lerch_family(LerchSelector which, LambdaParam lambda, Complex s_or_n, AParam a,
                               const ContourSpec& spec = {});

/// log G(a) as p(a) plus a single contour integral.
EvalResult hankel_barnes(AParam a, const ContourSpec& spec = {});

}  // namespace zetasum

#include "zetasum/hankel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "zetasum/quadrature.hpp"
#include "zetasum/special_core.hpp"

namespace zetasum {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPoleGuard = 1e-6;
constexpr int kMaxRayPanels = 20000;

constexpr std::array<std::string_view, 16> kKindNames = {
    "I_of_s",   "zeta_cont",       "zeta_neg", "zeta_pos",     "g_family",     "psi_plus_gamma",
    "inv_gamma", "log_gamma_rep",  "phi_cont", "phi_one",      "phi_deriv",    "zeta_prime_neg1",
    "log_G",    "psi_combined",    "psi_direct", "gamma_const"};

// A point of the contour with its logarithm fixed by the piece it lies on.
struct Point {
  Complex z;
  Complex log_z;
  bool on_cut;  // arg = +-pi exactly, so integer powers are real
};

// z^w with the logarithm of the point. On the cut an integer exponent gives an
// exactly real power, so the two rays cancel bit for bit.
Complex power(Complex w, const Point& p) {
  if (p.on_cut && is_integer(w)) {
    const double k = w.real();
    const double mag = std::pow(-p.z.real(), k);
    return std::fmod(std::abs(k), 2.0) == 1.0 ? -mag : mag;
  }
  return std::exp(w * p.log_z);
}

// 1 - e^z without cancellation near z = 0.
Complex one_minus_exp(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double half = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * half * half;
  return -Complex(re, std::exp(x) * std::sin(y));
}

bool uses_lambda(KindTag tag) {
  return tag == KindTag::phi_cont || tag == KindTag::phi_one || tag == KindTag::phi_deriv;
}

bool uses_a(KindTag tag) {
  switch (tag) {
    case KindTag::inv_gamma:
    case KindTag::psi_direct:
    case KindTag::gamma_const:
      return false;
    default:
      return true;
  }
}

bool has_hurwitz_denominator(KindTag tag) {
  return uses_a(tag) && !uses_lambda(tag) && tag != KindTag::psi_combined;
}

// Exponential decay rate of the integrand along the negative axis.
double decay_rate(const IntegrandKind& k) {
  switch (k.tag) {
    case KindTag::inv_gamma:
    case KindTag::psi_direct:
    case KindTag::gamma_const:
      return 1.0;
    case KindTag::psi_combined:
      return std::min(1.0, k.a.real());
    default:
      return k.a.real();
  }
}

Complex denominator(const IntegrandKind& k, Complex z) {
  if (uses_lambda(k.tag)) return 1.0 - k.lambda * std::exp(z);
  return one_minus_exp(z);
}

Complex integrand(const IntegrandKind& k, const Point& p) {
  const Complex z = p.z;
  switch (k.tag) {
    case KindTag::I_of_s:
    case KindTag::zeta_cont:
      return power(k.s - 1.0, p) * std::exp(k.a * z) / one_minus_exp(z);
    case KindTag::zeta_neg:
      return power(-(k.n + 1.0), p) * std::exp(k.a * z) / one_minus_exp(z);
    case KindTag::zeta_pos:
      return power(static_cast<double>(k.n), p) * p.log_z * std::exp(k.a * z) / one_minus_exp(z);
    case KindTag::g_family:
      return power(-(k.n + 1.0), p) * p.log_z * std::exp(k.a * z) / one_minus_exp(z);
    case KindTag::zeta_prime_neg1:
      return power(-2.0, p) * p.log_z * std::exp(k.a * z) / one_minus_exp(z);
    case KindTag::log_gamma_rep:
      return power(-1.0, p) * p.log_z * std::exp(k.a * z) / one_minus_exp(z);
    case KindTag::psi_plus_gamma:
      return std::exp(k.a * z) * p.log_z / one_minus_exp(z);
    case KindTag::psi_combined:
      return (std::exp(z) * power(-1.0, p) + std::exp(k.a * z) / one_minus_exp(z)) * p.log_z;
    case KindTag::inv_gamma:
      return power(-k.s, p) * std::exp(z);
    case KindTag::psi_direct:
      return power(-k.s, p) * std::exp(z) * p.log_z;
    case KindTag::gamma_const:
      return std::exp(z) * p.log_z * power(-1.0, p);
    case KindTag::phi_cont:
      return power(k.s - 1.0, p) * std::exp(k.a * z) / (1.0 - k.lambda * std::exp(z));
    case KindTag::phi_one:
      return std::exp(k.a * z) * p.log_z / (1.0 - k.lambda * std::exp(z));
    case KindTag::phi_deriv:
      return power(-(k.n + 1.0), p) * p.log_z * std::exp(k.a * z) / (1.0 - k.lambda * std::exp(z));
    case KindTag::log_G: {
      const Complex poly = (k.a - 1.0) * power(-1.0, p) - power(-2.0, p);
      return poly * p.log_z * std::exp(k.a * z) / one_minus_exp(z);
    }
  }
  return 0.0;
}

void validate_kind(const IntegrandKind& k) {
  if (uses_a(k.tag) && !(k.a.real() > 0.0)) {
    throw DomainError(std::string(to_string(k.tag)) + ": requires Re(a) > 0");
  }
  if (uses_lambda(k.tag)) {
    if (!(std::abs(k.lambda) <= 1.0)) throw DomainError("contour: requires |lambda| <= 1");
    if (k.lambda == Complex(1.0, 0.0)) throw PoleError("contour: lambda = 1 is the Hurwitz case");
  }
  if (!is_finite(k.s) || !is_finite(k.a) || !is_finite(k.lambda)) throw DomainError("contour: non-finite parameter");
}

// Distance from the origin to the nearest zero of 1 - lambda e^z.
double lerch_pole_distance(Complex lambda) {
  const Complex base = -std::log(lambda);
  double d = std::numeric_limits<double>::infinity();
  const long k0 = std::lround(-base.imag() / (2.0 * kPi));
  for (long k = k0 - 1; k <= k0 + 1; ++k) d = std::min(d, std::abs(base + Complex(0.0, 2.0 * kPi * k)));
  return d;
}

struct Accumulator {
  Complex sum = 0.0;
  double magnitude = 0.0;
  double min_denominator = std::numeric_limits<double>::infinity();
};

}  // namespace

std::string_view to_string(KindTag tag) { return kKindNames[static_cast<std::size_t>(tag)]; }

KindTag kind_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == name) return static_cast<KindTag>(i);
  throw DomainError("unknown integrand kind '" + std::string(name) + "'");
}

void validate(const ContourSpec& spec) {
  if (!(spec.epsilon > 0.0 && spec.epsilon < 2.0 * kPi)) throw DomainError("contour: epsilon must lie in (0, 2 pi)");
  if (spec.ray_cutoff != 0.0 && !(spec.ray_cutoff > spec.epsilon)) {
    throw DomainError("contour: ray_cutoff must exceed epsilon");
  }
  if (spec.n_ray < 2 || spec.n_ray > 64) throw DomainError("contour: n_ray must lie in [2, 64]");
  if (spec.n_circle < spec.n_ray || spec.n_circle % 2 != 0) {
    throw DomainError("contour: n_circle must be even and at least n_ray");
  }
  if (!(spec.tail_tol > 0.0) || !(spec.tol > 0.0)) throw DomainError("contour: tolerances must be positive");
}

double effective_epsilon(const IntegrandKind& kind, const ContourSpec& spec) {
  if (!uses_lambda(kind.tag)) return spec.epsilon;
  const double d = lerch_pole_distance(kind.lambda);
  if (spec.epsilon <= d - 0.5) return spec.epsilon;
  return d - std::min(0.5, 0.5 * d);
}

ContourPieces contour_pieces(const IntegrandKind& kind, const ContourSpec& spec, int refine) {
  validate(spec);
  validate_kind(kind);
  const double eps = effective_epsilon(kind, spec);
  const GaussRule rule = gauss_legendre(spec.n_ray);
  const int split = 1 << refine;
  const bool check_poles = uses_lambda(kind.tag) || has_hurwitz_denominator(kind.tag);

  auto visit = [&](Accumulator& acc, const Point& p, Complex weight) {
    if (check_poles) acc.min_denominator = std::min(acc.min_denominator, std::abs(denominator(kind, p.z)));
    const Complex v = weight * integrand(kind, p);
    acc.sum += v;
    acc.magnitude += std::abs(v);
  };

  // Circle z = eps e^{i theta}, theta from -pi to pi, dz = i z dtheta.
  Accumulator circle;
  // Panels are kept no longer than the gap between circle and nearest pole.
  const double pole = uses_lambda(kind.tag) ? lerch_pole_distance(kind.lambda)
                      : has_hurwitz_denominator(kind.tag) ? 2.0 * kPi
                                                           : std::numeric_limits<double>::infinity();
  const int by_gap = static_cast<int>(std::ceil(2.0 * kPi * eps / (pole - eps)));
  const int circle_panels = std::max((spec.n_circle + spec.n_ray - 1) / spec.n_ray, by_gap) * split;
  const double width = 2.0 * kPi / circle_panels;
  const double log_eps = std::log(eps);
  for (int j = 0; j < circle_panels; ++j) {
    const double mid = -kPi + (j + 0.5) * width;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double theta = mid + 0.5 * width * rule.nodes[i];
      const Complex z = std::polar(eps, theta);
      visit(circle, {z, Complex(log_eps, theta), false}, 0.5 * width * rule.weights[i] * Complex(0.0, 1.0) * z);
    }
  }

  // Rays: the lower edge minus the upper edge, both over x in (eps, inf).
  // Panels grow from min(1, eps) by doubling up to width 2.
  Accumulator rays;
  const double rate = decay_rate(kind);
  const double cutoff = spec.ray_cutoff > 0.0 ? spec.ray_cutoff : std::max(40.0, 40.0 / rate);
  double x = eps;
  double h = std::min(1.0, eps);
  for (int panel = 0;; ++panel) {
    if (panel > kMaxRayPanels) {
      throw ConvergenceError("contour: ray integrand did not decay below tail_tol", rays.sum, rays.magnitude);
    }
    const double sub = h / split;
    double edge = 0.0;
    for (int q = 0; q < split; ++q) {
      const double mid = x + (q + 0.5) * sub;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double xi = mid + 0.5 * sub * rule.nodes[i];
        const double w = 0.5 * sub * rule.weights[i];
        const double lx = std::log(xi);
        visit(rays, {Complex(-xi, 0.0), Complex(lx, -kPi), true}, w);
        visit(rays, {Complex(-xi, 0.0), Complex(lx, kPi), true}, -w);
      }
    }
    x += h;
    if (x >= cutoff) {
      const Point lo{Complex(-x, 0.0), Complex(std::log(x), -kPi), true};
      const Point hi{Complex(-x, 0.0), Complex(std::log(x), kPi), true};
      edge = std::max(std::abs(integrand(kind, lo)), std::abs(integrand(kind, hi)));
      if (edge < spec.tail_tol * std::max(1.0, std::abs(rays.sum + circle.sum))) break;
    }
    h = std::min(2.0, 2.0 * h);
  }

  const double min_den = std::min(circle.min_denominator, rays.min_denominator);
  if (min_den < kPoleGuard) {
    throw PoleError("contour: integrand denominator within 1e-6 of a pole (min |1 - lambda e^z| = " +
                    std::to_string(min_den) + ")");
  }

  const Complex two_pi_i(0.0, 2.0 * kPi);
  const double scale = 1.0 / (2.0 * kPi);
  return {circle.sum / two_pi_i, rays.sum / two_pi_i, eps,
          8.0 * kEps * scale * (circle.magnitude + rays.magnitude)};
}

EvalResult contour_integrate(const IntegrandKind& kind, const ContourSpec& spec) {
  const ContourPieces coarse = contour_pieces(kind, spec, 0);
  const ContourPieces fine = contour_pieces(kind, spec, 1);
  const Complex v0 = coarse.circle + coarse.rays;
  const Complex v1 = fine.circle + fine.rays;
  const double diff = std::abs(v1 - v0);
  const double err = diff + fine.rounding;
  if (diff > spec.tol * std::max(1.0, std::abs(v1))) {
    throw ConvergenceError("contour: node doubling changed the value by " + std::to_string(diff), v1, err);
  }
  return {v1, err, Method::contour};
}

namespace {

int require_order(Complex s_or_n, int min, const char* what) {
  if (!is_integer(s_or_n) || s_or_n.real() < min) {
    throw DomainError(std::string(what) + ": order must be an integer >= " + std::to_string(min));
  }
  if (s_or_n.real() > 170) throw OrderTooLargeError(std::string(what) + ": order too large");
  return static_cast<int>(s_or_n.real());
}

double factorial(int n) { return std::tgamma(n + 1.0); }

EvalResult scaled(EvalResult r, Complex factor, Complex shift = 0.0) {
  r.value = factor * r.value + shift;
  r.abs_err *= std::abs(factor);
  return r;
}

Complex gamma_of(Complex s) { return std::exp(log_gamma(s).value); }

void require_not_positive_integer(Complex s, const char* what) {
  if (is_integer(s) && s.real() >= 1.0) {
    if (s.real() == 1.0) throw PoleError(std::string(what) + ": pole at s = 1");
    throw DomainError(std::string(what) + ": Gamma(1 - s) is singular at s = 2, 3, ...");
  }
}

}  // namespace

EvalResult hankel_zeta_family(ZetaSelector which, Complex s_or_n, AParam a, const ContourSpec& spec) {
  IntegrandKind k{KindTag::zeta_cont};
  k.a = a.value();
  switch (which) {
    case ZetaSelector::cont: {
      require_not_positive_integer(s_or_n, "hankel_zeta_family(cont)");
      k.s = s_or_n;
      return scaled(contour_integrate(k, spec), gamma_of(1.0 - s_or_n));
    }
    case ZetaSelector::neg: {
      k.tag = KindTag::zeta_neg;
      k.n = require_order(s_or_n, 0, "hankel_zeta_family(neg)");
      return scaled(contour_integrate(k, spec), factorial(k.n));
    }
    case ZetaSelector::pos: {
      k.tag = KindTag::zeta_pos;
      k.n = require_order(s_or_n, 1, "hankel_zeta_family(pos)");
      const double sign = k.n % 2 == 1 ? 1.0 : -1.0;
      return scaled(contour_integrate(k, spec), sign / factorial(k.n));
    }
    case ZetaSelector::g: {
      k.tag = KindTag::g_family;
      k.n = require_order(s_or_n, 0, "hankel_zeta_family(g)");
      return scaled(contour_integrate(k, spec), factorial(k.n));
    }
    case ZetaSelector::zprime_neg1: {
      k.tag = KindTag::zeta_prime_neg1;
      const Complex av = a.value();
      const Complex poly = 0.5 * (1.0 - constants().gamma) * (av * av - av + 1.0 / 6.0);
      return scaled(contour_integrate(k, spec), 1.0, poly);
    }
  }
  throw DomainError("hankel_zeta_family: unknown selector");
}

EvalResult hankel_gamma_family(GammaSelector which, Complex arg, const ContourSpec& spec) {
  if (which != GammaSelector::gamma_const && !(arg.real() > 0.0)) {
    throw DomainError("hankel_gamma_family: requires Re(argument) > 0");
  }
  IntegrandKind k{KindTag::inv_gamma};
  switch (which) {
    case GammaSelector::psi_combined:
      k.tag = KindTag::psi_combined;
      k.a = arg;
      return contour_integrate(k, spec);
    case GammaSelector::psi_direct:
      k.tag = KindTag::psi_direct;
      k.s = arg;
      return scaled(contour_integrate(k, spec), gamma_of(arg));
    case GammaSelector::psi_plus_gamma:
      k.tag = KindTag::psi_plus_gamma;
      k.a = arg;
      return contour_integrate(k, spec);
    case GammaSelector::inv_gamma:
      k.s = arg;
      return contour_integrate(k, spec);
    case GammaSelector::gamma_const:
      k.tag = KindTag::gamma_const;
      return scaled(contour_integrate(k, spec), -1.0);
    case GammaSelector::log_gamma: {
      k.tag = KindTag::log_gamma_rep;
      k.a = arg;
      const Constants& c = constants();
      return scaled(contour_integrate(k, spec), 1.0, c.log_sqrt_2pi - c.gamma * (arg - 0.5));
    }
  }
  throw DomainError("hankel_gamma_family: unknown selector");
}

EvalResult hankel_lerch_family(LerchSelector which, LambdaParam lambda, Complex s_or_n, AParam a,
                               const ContourSpec& spec) {
  IntegrandKind k{KindTag::phi_cont};
  k.a = a.value();
  k.lambda = lambda.value();
  switch (which) {
    case LerchSelector::phi_cont:
      require_not_positive_integer(s_or_n, "hankel_lerch_family(phi_cont)");
      k.s = s_or_n;
      return scaled(contour_integrate(k, spec), gamma_of(1.0 - s_or_n));
    case LerchSelector::phi_one:
      k.tag = KindTag::phi_one;
      return scaled(contour_integrate(k, spec), -1.0);
    case LerchSelector::phi_deriv:
      k.tag = KindTag::phi_deriv;
      k.n = require_order(s_or_n, 0, "hankel_lerch_family(phi_deriv)");
      return scaled(contour_integrate(k, spec), factorial(k.n));
  }
  throw DomainError("hankel_lerch_family: unknown selector");
}

EvalResult hankel_barnes(AParam a, const ContourSpec& spec) {
  IntegrandKind k{KindTag::log_G};
  k.a = a.value();
  return scaled(contour_integrate(k, spec), 1.0, barnes_poly(a.value()));
}

}  // namespace zetasum

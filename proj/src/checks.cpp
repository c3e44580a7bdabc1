#include "zetasum/checks.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "zetasum/integrals.hpp"
#include "zetasum/lerch.hpp"
#include "zetasum/quadrature.hpp"
#include "zetasum/special_core.hpp"

namespace zetasum {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string str(Complex z) {
  std::ostringstream out;
  out.precision(6);
  out << z.real();
  if (z.imag() != 0.0) out << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return out.str();
}

class Tally {
 public:
  // Evaluates one grid point; `f` returns its deviation.
  template <class F>
  void point(const std::string& label, F&& f) {
    ++size_;
    double dev;
    try {
      dev = f();
      if (std::isnan(dev)) dev = kInf;
    } catch (const std::exception& e) {
      dev = kInf;
      if (failure_.empty()) failure_ = label + ": " + e.what();
    }
    if (size_ == 1 || dev > max_) {
      max_ = dev;
      worst_ = label;
    }
  }

  std::size_t size() const { return size_; }
  double max() const { return max_; }
  const std::string& worst() const { return worst_; }
  const std::string& failure() const { return failure_; }

 private:
  std::size_t size_ = 0;
  double max_ = 0.0;
  std::string worst_;
  std::string failure_;
};

using Suite = std::function<void(Tally&, const CheckConfig&)>;

struct Entry {
  const char* id;
  const char* alias;
  double tolerance;
  Suite run;
};

// The (t, a) grid shared by the series and moment suites.
const std::vector<Complex>& series_a() {
  static const std::vector<Complex> a = {1.0, 1.5, 2.5, Complex(1.0, 0.5)};
  return a;
}

std::vector<double> series_t(Complex a) { return {0.1, 0.25, 0.45 * a.real()}; }

const std::vector<Complex>& oracle_a() {
  static const std::vector<Complex> a = {0.5, 1.0, 1.5, 2.5, Complex(1.0, 0.5)};
  return a;
}

std::string tap(double t, Complex a, int p) {
  return "t=" + str(t) + " a=" + str(a) + " p=" + std::to_string(p);
}

void series_suite(Tally& tally, const CheckConfig& cfg, SeriesFamily family, int p_lo, int p_hi) {
  for (Complex a : series_a()) {
    for (double t : series_t(a)) {
      for (int p = p_lo; p <= p_hi; ++p) {
        tally.point(tap(t, a, p), [&] {
          SeriesQuery q;
          q.t = t;
          q.a = AParam(a);
          q.p = p;
          const Complex closed = family == SeriesFamily::S ? s_closed(q) : t_closed(q);
          return deviation(closed, series_bruteforce(family, q, cfg.series).value);
        });
      }
    }
  }
}

void lerch_series_suite(Tally& tally, const CheckConfig& cfg, int p_lo, int p_hi) {
  const Complex lambdas[] = {0.5, -0.5, 0.3, Complex(0.2, 0.2)};
  for (Complex lam : lambdas) {
    for (Complex a : series_a()) {
      for (double t : series_t(a)) {
        for (int p = p_lo; p <= p_hi; ++p) {
          tally.point(tap(t, a, p) + " lambda=" + str(lam), [&] {
            SeriesQuery q;
            q.t = t;
            q.a = AParam(a);
            q.p = p;
            q.lambda = LambdaParam(lam);
            return deviation(lerch_series_closed(q), series_bruteforce(SeriesFamily::LERCH, q, cfg.series).value);
          });
        }
      }
    }
  }
}

// sum_n lambda^n (n + a)^m and -sum_n lambda^n (n + a)^m log(n + a), summed
// until the terms vanish relative to the total.
Complex brute_power_sum(Complex lam, int m, Complex a, bool with_log) {
  Complex sum = 0.0;
  Complex lam_pow = 1.0;
  for (int n = 0; n < 100000; ++n) {
    const Complex base = static_cast<double>(n) + a;
    Complex term = lam_pow * std::pow(base, m);
    if (with_log) term *= -std::log(base);
    sum += term;
    if (n > 10 && std::abs(term) < 1e-18 * std::abs(sum)) break;
    lam_pow *= lam;
  }
  return sum;
}

const Complex kNegLambdas[] = {0.5, -0.5, 0.3};
const double kNegA[] = {1.0, 2.5};

Complex hankel_reference_zeta(ZetaSelector which, Complex s_or_n, AParam a) {
  switch (which) {
    case ZetaSelector::cont:
      return hurwitz_zeta(s_or_n, a).value;
    case ZetaSelector::neg:
      return hurwitz_zeta(-s_or_n, a).value;
    case ZetaSelector::pos:
      return hurwitz_zeta(s_or_n + 1.0, a).value;
    case ZetaSelector::g:
      return g(static_cast<int>(s_or_n.real()), a).value;
    case ZetaSelector::zprime_neg1:
      return hurwitz_zeta_sderiv(-1.0, a).value;
  }
  return 0.0;
}

void hankel_corpus(Tally& tally, const CheckConfig& cfg) {
  const ContourSpec& spec = cfg.contour;
  struct ZetaCase {
    ZetaSelector which;
    const char* name;
    std::vector<Complex> args;
  };
  const ZetaCase zeta_cases[] = {
      {ZetaSelector::cont, "zeta", {-2.5, Complex(-1.5, 1.0), 0.5, 2.5, Complex(0.3, 2.0)}},
      {ZetaSelector::neg, "zeta_neg", {0.0, 1.0, 2.0, 3.0, 5.0}},
      {ZetaSelector::pos, "zeta_pos", {1.0, 2.0, 3.0}},
      {ZetaSelector::g, "g", {0.0, 1.0, 2.0, 3.0}},
      {ZetaSelector::zprime_neg1, "zeta'(-1)", {0.0}},
  };
  for (Complex av : oracle_a()) {
    const AParam a(av);
    for (const ZetaCase& c : zeta_cases) {
      for (Complex arg : c.args) {
        tally.point(std::string(c.name) + " arg=" + str(arg) + " a=" + str(av), [&] {
          return deviation(hankel_zeta_family(c.which, arg, a, spec).value, hankel_reference_zeta(c.which, arg, a));
        });
      }
    }
    const Complex psi = digamma(av).value;
    const double gam = constants().gamma;
    tally.point("psi+gamma a=" + str(av), [&] {
      return deviation(hankel_gamma_family(GammaSelector::psi_plus_gamma, av, spec).value, psi + gam);
    });
    tally.point("psi combined a=" + str(av), [&] {
      return deviation(hankel_gamma_family(GammaSelector::psi_combined, av, spec).value, psi);
    });
    tally.point("psi direct a=" + str(av), [&] {
      return deviation(hankel_gamma_family(GammaSelector::psi_direct, av, spec).value, psi);
    });
    tally.point("log gamma a=" + str(av), [&] {
      return deviation(hankel_gamma_family(GammaSelector::log_gamma, av, spec).value, log_gamma(av).value);
    });
    tally.point("1/gamma s=" + str(av), [&] {
      return deviation(hankel_gamma_family(GammaSelector::inv_gamma, av, spec).value, std::exp(-log_gamma(av).value));
    });
    tally.point("log G a=" + str(av), [&] { return deviation(hankel_barnes(a, spec).value, barnes_log_g(a).value); });

    // The series reference needs Re(s) > 0 on the unit circle.
    const Complex lambdas[] = {0.5, -0.5, 0.3, Complex(0.2, 0.2), -1.0, Complex(0.0, 1.0)};
    for (Complex lv : lambdas) {
      const LambdaParam lam(lv);
      const bool on_circle = !(std::abs(lv) < 1.0);
      const std::string where = " lambda=" + str(lv) + " a=" + str(av);
      for (Complex s : {Complex(0.5), Complex(2.5), Complex(-1.5)}) {
        if (on_circle && s.real() <= 0.0) continue;
        tally.point("phi s=" + str(s) + where, [&] {
          return deviation(hankel_lerch_family(LerchSelector::phi_cont, lam, s, a, spec).value,
                           lerch_phi(lam, s, a).value);
        });
      }
      tally.point("phi s=1" + where, [&] {
        return deviation(hankel_lerch_family(LerchSelector::phi_one, lam, 0.0, a, spec).value,
                         lerch_phi(lam, 1.0, a).value);
      });
      for (int n = 0; n <= 2 && !on_circle; ++n) {
        tally.point("phi' n=" + std::to_string(n) + where, [&] {
          const Complex ref = lerch_phi_sderiv(lam, -static_cast<double>(n), a).value +
                              psi_int(n) * lerch_phi(lam, -static_cast<double>(n), a).value;
          return deviation(hankel_lerch_family(LerchSelector::phi_deriv, lam, static_cast<double>(n), a, spec).value,
                           ref);
        });
      }
    }
  }
  tally.point("gamma constant", [&] {
    return deviation(hankel_gamma_family(GammaSelector::gamma_const, 0.0, spec).value, literal::euler_gamma);
  });
  tally.point("1/gamma s=3", [&] {
    return deviation(hankel_gamma_family(GammaSelector::inv_gamma, 3.0, spec).value, 0.5);
  });
}

// One representative of every integrand kind.
std::vector<IntegrandKind> kind_samples() {
  std::vector<IntegrandKind> out;
  const Complex a(1.0, 0.5);
  auto add = [&](KindTag tag, Complex s, int n, Complex av, Complex lam) { out.push_back({tag, s, n, av, lam}); };
  add(KindTag::I_of_s, 2.5, 0, 1.5, 1.0);
  add(KindTag::zeta_cont, Complex(-1.5, 1.0), 0, a, 1.0);
  add(KindTag::zeta_neg, 0.0, 2, a, 1.0);
  add(KindTag::zeta_pos, 0.0, 2, 0.5, 1.0);
  add(KindTag::g_family, 0.0, 3, 2.5, 1.0);
  add(KindTag::psi_plus_gamma, 0.0, 0, a, 1.0);
  add(KindTag::inv_gamma, Complex(1.5, 0.5), 0, 1.0, 1.0);
  add(KindTag::log_gamma_rep, 0.0, 0, a, 1.0);
  add(KindTag::phi_cont, 0.5, 0, a, -0.5);
  add(KindTag::phi_cont, 2.5, 0, 1.0, Complex(0.2, 0.2));
  add(KindTag::phi_one, 0.0, 0, 1.5, -0.5);
  add(KindTag::phi_deriv, 0.0, 2, a, -0.5);
  add(KindTag::phi_deriv, 0.0, 1, 1.0, Complex(0.2, 0.2));
  add(KindTag::zeta_prime_neg1, 0.0, 0, 1.5, 1.0);
  add(KindTag::log_G, 0.0, 0, a, 1.0);
  add(KindTag::psi_combined, 0.0, 0, 2.5, 1.0);
  add(KindTag::psi_direct, Complex(0.5, 1.0), 0, 1.0, 1.0);
  add(KindTag::gamma_const, 0.0, 0, 1.0, 1.0);
  return out;
}

void eps_independence(Tally& tally, const CheckConfig& cfg) {
  for (const IntegrandKind& kind : kind_samples()) {
    std::vector<Complex> values;
    for (double eps : {0.5, 1.0, 3.0}) {
      ContourSpec spec = cfg.contour;
      spec.epsilon = eps;
      values.push_back(contour_integrate(kind, spec).value);
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::size_t j = i + 1; j < values.size(); ++j) {
        tally.point(std::string(to_string(kind.tag)) + " pair " + std::to_string(i) + std::to_string(j),
                    [&] { return deviation(values[i], values[j]); });
      }
    }
  }
}

void spot_values(Tally& tally, const CheckConfig&) {
  const double gam = literal::euler_gamma;
  tally.point("zeta(-1,1)", [] { return deviation(hurwitz_zeta(-1.0, AParam(1.0)).value, -1.0 / 12.0); });
  for (Complex a : oracle_a()) {
    tally.point("zeta(0,a) a=" + str(a), [&] { return deviation(hurwitz_zeta(0.0, AParam(a)).value, 0.5 - a); });
  }
  tally.point("zeta'(0,1)", [] {
    return deviation(hurwitz_zeta_sderiv(0.0, AParam(1.0)).value, -literal::log_sqrt_2pi);
  });
  tally.point("psi(1)", [&] { return deviation(digamma(1.0).value, -gam); });
  tally.point("psi(2)", [&] { return deviation(digamma(2.0).value, 1.0 - gam); });
  tally.point("log G(1)", [] { return deviation(barnes_log_g(AParam(1.0)).value, 0.0); });
  tally.point("log G(2)", [] { return deviation(barnes_log_g(AParam(2.0)).value, 0.0); });
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"s-series", "thm1", 1e-9,
       [](Tally& t, const CheckConfig& c) { series_suite(t, c, SeriesFamily::S, 1, 4); }},
      {"s-series-p0", "eq4.3", 1e-9,
       [](Tally& t, const CheckConfig& c) { series_suite(t, c, SeriesFamily::S, 0, 0); }},
      {"s-series-p1", "eq4.7", 1e-12,
       [](Tally& tally, const CheckConfig&) {
         for (Complex a : series_a()) {
           for (double t : series_t(a)) {
             tally.point(tap(t, a, 1), [&] {
               SeriesQuery q;
               q.t = t;
               q.a = AParam(a);
               q.p = 1;
               return deviation(s_closed(q), s_closed_p1(t, q.a));
             });
           }
         }
       }},
      {"t-series", "thm2", 1e-9,
       [](Tally& t, const CheckConfig& c) { series_suite(t, c, SeriesFamily::T, 1, 3); }},
      {"lerch-series", "thm3", 1e-9, [](Tally& t, const CheckConfig& c) { lerch_series_suite(t, c, 1, 3); }},
      {"lerch-series-p0", "eq5.10", 1e-9, [](Tally& t, const CheckConfig& c) { lerch_series_suite(t, c, 0, 0); }},
      {"s-derivative", nullptr, 1e-6,
       [](Tally& tally, const CheckConfig&) {
         const double h = 1e-5;
         for (Complex a : series_a()) {
           for (double t : series_t(a)) {
             for (int p = 1; p <= 4; ++p) {
               tally.point(tap(t, a, p), [&] {
                 SeriesQuery hi, lo;
                 hi.a = lo.a = AParam(a);
                 hi.p = lo.p = p;
                 hi.t = t + h;
                 lo.t = t - h;
                 const Complex diff = (s_closed(hi) - s_closed(lo)) / (2.0 * h);
                 const Complex expect = std::pow(t, p - 1) * (digamma(a).value - digamma(a - t).value);
                 return deviation(diff, expect);
               });
             }
           }
         }
       }},
      {"antiderivative-rule", nullptr, 1e-10,
       [](Tally& tally, const CheckConfig&) {
         const Complex zs[] = {1.0, Complex(-0.5, 2.0), Complex(0.0, 3.0), 0.7};
         for (int p = 1; p <= 5; ++p) {
           for (Complex z : zs) {
             for (double t : {0.3, 0.8}) {
               tally.point("p=" + std::to_string(p) + " z=" + str(z) + " t=" + str(t), [&] {
                 Complex sum = 0.0;
                 double fact = 1.0;
                 for (int k = 0; k < p; ++k) {
                   if (k > 0) fact *= k;
                   sum += fact * static_cast<double>(binomial(p - 1, k)) * std::pow(t, p - 1 - k) / std::pow(z, k + 1);
                 }
                 double pfact = 1.0;
                 for (int i = 2; i < p; ++i) pfact *= i;
                 const Complex formula = std::pow(t, p) / static_cast<double>(p) + std::exp(-t * z) * sum -
                                         pfact / std::pow(z, p);
                 const Complex numeric =
                     integrate_interval([&](double y) { return std::pow(y, p - 1) * (1.0 - std::exp(-z * y)); }, 0.0, t)
                         .value;
                 return deviation(formula, numeric);
               });
             }
           }
         }
       }},
      {"lgamma-moment", "thm4", 1e-8,
       [](Tally& tally, const CheckConfig&) {
         for (Complex a : series_a()) {
           for (double t : series_t(a)) {
             for (int m = 0; m <= 3; ++m) {
               tally.point("t=" + str(t) + " a=" + str(a) + " m=" + std::to_string(m), [&] {
                 const MomentQuery q{t, AParam(a), m};
                 return deviation(log_gamma_moment(q), log_gamma_moment_quadrature(q).value);
               });
             }
           }
         }
       }},
      {"lgamma-m0-forms", "eq7.5-7.7", 1e-9,
       [](Tally& tally, const CheckConfig&) {
         for (Complex a : series_a()) {
           for (double t : series_t(a)) {
             const MomentQuery q{t, AParam(a), 0};
             const std::string where = "t=" + str(t) + " a=" + str(a);
             tally.point(where + " g/zeta", [&] {
               return deviation(log_gamma_integral_m0(q, M0Form::g_form), log_gamma_integral_m0(q, M0Form::zeta_form));
             });
             tally.point(where + " zeta/barnes", [&] {
               return deviation(log_gamma_integral_m0(q, M0Form::zeta_form),
                                log_gamma_integral_m0(q, M0Form::barnes_form));
             });
             tally.point(where + " g/barnes", [&] {
               return deviation(log_gamma_integral_m0(q, M0Form::g_form), log_gamma_integral_m0(q, M0Form::barnes_form));
             });
           }
         }
       }},
      {"moment-derivative", nullptr, 1e-6,
       [](Tally& tally, const CheckConfig&) {
         const double h = 1e-5;
         for (Complex a : series_a()) {
           for (double t : series_t(a)) {
             for (int m = 0; m <= 3; ++m) {
               tally.point("t=" + str(t) + " a=" + str(a) + " m=" + std::to_string(m), [&] {
                 const Complex diff = (log_gamma_moment({t + h, AParam(a), m}) - log_gamma_moment({t - h, AParam(a), m})) /
                                      (2.0 * h);
                 return deviation(diff, std::pow(t, m) * log_gamma(a + t).value);
               });
             }
           }
         }
       }},
      {"psi-moment", nullptr, 1e-8,
       [](Tally& tally, const CheckConfig&) {
         for (Complex a : series_a()) {
           for (double t : series_t(a)) {
             for (int p = 1; p <= 4; ++p) {
               tally.point(tap(t, a, p), [&] {
                 return deviation(psi_moment(t, AParam(a), p), psi_moment_quadrature(t, AParam(a), p).value);
               });
             }
           }
         }
       }},
      {"neg-polygamma", nullptr, 1e-8,
       [](Tally& tally, const CheckConfig&) {
         for (int k = 1; k <= 6; ++k) {
           for (double t : {0.3, 1.0, 2.5}) {
             tally.point("k=" + std::to_string(k) + " t=" + str(t), [&] {
               return deviation(negative_polygamma(k, t), negative_polygamma_quadrature(k, t).value);
             });
           }
         }
       }},
      {"neg-polygamma-derivative", nullptr, 1e-6,
       [](Tally& tally, const CheckConfig&) {
         const double h = 1e-5;
         for (double t : {0.3, 1.0, 2.5}) {
           tally.point("t=" + str(t), [&] {
             const Complex diff = (negative_polygamma(2, t + h) - negative_polygamma(2, t - h)) / (2.0 * h);
             return deviation(diff, log_gamma(t).value);
           });
         }
       }},
      {"lerch-neg", "prop1", 1e-10,
       [](Tally& tally, const CheckConfig&) {
         for (Complex lam : kNegLambdas) {
           for (double a : kNegA) {
             for (int m = 0; m <= 6; ++m) {
               tally.point("m=" + std::to_string(m) + " lambda=" + str(lam) + " a=" + str(a), [&] {
                 return deviation(lerch_phi_neg(LambdaParam(lam), m, AParam(a)), brute_power_sum(lam, m, a, false));
               });
             }
           }
         }
       }},
      {"lerch-sderiv", "prop2", 1e-8,
       [](Tally& tally, const CheckConfig&) {
         for (Complex lam : kNegLambdas) {
           for (double a : kNegA) {
             for (int m = 0; m <= 6; ++m) {
               tally.point("m=" + std::to_string(m) + " lambda=" + str(lam) + " a=" + str(a), [&] {
                 return deviation(lerch_phi_sderiv_neg(LambdaParam(lam), m, AParam(a), SDerivMethod::l_derivatives).value,
                                  brute_power_sum(lam, m, a, true));
               });
             }
           }
         }
       }},
      {"lerch-sderiv-kernel", "prop3", 1e-8,
       [](Tally& tally, const CheckConfig&) {
         for (Complex lam : kNegLambdas) {
           for (double a : kNegA) {
             for (int m = 0; m <= 6; ++m) {
               tally.point("m=" + std::to_string(m) + " lambda=" + str(lam) + " a=" + str(a), [&] {
                 const LambdaParam l(lam);
                 return deviation(lerch_phi_sderiv_neg(l, m, AParam(a), SDerivMethod::kernel_integral).value,
                                  lerch_phi_sderiv_neg(l, m, AParam(a), SDerivMethod::l_derivatives).value);
               });
             }
           }
         }
       }},
      {"l-function", "lemma5", 1e-8,
       [](Tally& tally, const CheckConfig&) {
         const Complex lambdas[] = {0.5, -0.5, 0.3, Complex(0.2, 0.2), 0.9};
         for (Complex lam : lambdas) {
           for (Complex a : oracle_a()) {
             tally.point("lambda=" + str(lam) + " a=" + str(a), [&] {
               const LambdaParam l(lam);
               return deviation(l_function(l, AParam(a), LMethod::integral).value,
                                l_function(l, AParam(a), LMethod::series).value);
             });
           }
         }
       }},
      {"geometric-sum", "eq6.2", 1e-10,
       [](Tally& tally, const CheckConfig&) {
         const Complex lambdas[] = {0.5, -0.5, 0.9, Complex(0.0, 0.3)};
         for (Complex lam : lambdas) {
           for (int m = 0; m <= 8; ++m) {
             tally.point("m=" + std::to_string(m) + " lambda=" + str(lam), [&] {
               Complex brute = 0.0;
               Complex lam_pow = 1.0;
               for (int k = 0; k < 10000; ++k) {
                 brute += std::pow(static_cast<double>(k), m) * lam_pow;
                 lam_pow *= lam;
               }
               return deviation(power_geometric_sum(m, lam), brute);
             });
           }
         }
       }},
      {"hankel-corpus", "hankel", 1e-7, hankel_corpus},
      {"eps-independence", nullptr, 1e-8, eps_independence},
      {"i-zero", "I-zero", 1e-10,
       [](Tally& tally, const CheckConfig& cfg) {
         for (int m = 2; m <= 5; ++m) {
           for (Complex a : oracle_a()) {
             tally.point("m=" + std::to_string(m) + " a=" + str(a), [&] {
               IntegrandKind k{KindTag::I_of_s};
               k.s = static_cast<double>(m);
               k.a = a;
               return std::abs(contour_integrate(k, cfg.contour).value);
             });
           }
         }
       }},
      {"i-real-axis", "eq2.2", 1e-8,
       [](Tally& tally, const CheckConfig& cfg) {
         for (double s : {2.5, 3.5}) {
           for (Complex a : oracle_a()) {
             tally.point("s=" + str(s) + " a=" + str(a), [&] {
               IntegrandKind k{KindTag::I_of_s};
               k.s = s;
               k.a = a;
               const Complex contour = contour_integrate(k, cfg.contour).value;
               const EvalResult axis = real_axis_quadrature(
                   [&](double x) { return std::pow(x, s - 1.0) * std::exp(-a * x) / -std::expm1(-x); }, 1e-13);
               return deviation(contour, std::sin(kPi * s) / kPi * axis.value);
             });
           }
         }
       }},
      {"branch-cancel", nullptr, 1e-12,
       [](Tally& tally, const CheckConfig& cfg) {
         for (int n = 0; n <= 4; ++n) {
           for (Complex a : oracle_a()) {
             tally.point("zeta_neg n=" + std::to_string(n) + " a=" + str(a), [&] {
               return std::abs(contour_pieces({KindTag::zeta_neg, 0.0, n, a, 1.0}, cfg.contour).rays);
             });
           }
         }
         for (int s = 1; s <= 4; ++s) {
           tally.point("inv_gamma s=" + std::to_string(s), [&] {
             return std::abs(contour_pieces({KindTag::inv_gamma, static_cast<double>(s), 0, 1.0, 1.0}, cfg.contour).rays);
           });
         }
       }},
      {"shift-zeta", nullptr, 1e-10,
       [](Tally& tally, const CheckConfig&) {
         const Complex ss[] = {-2.5, -1.0, 0.5, 2.0, Complex(3.0, 1.0), Complex(0.3, 4.0)};
         for (Complex s : ss) {
           for (Complex a : oracle_a()) {
             tally.point("s=" + str(s) + " a=" + str(a), [&] {
               const Complex lhs = hurwitz_zeta(s, AParam(a)).value - hurwitz_zeta(s, AParam(a + 1.0)).value;
               return deviation(lhs, std::exp(-s * std::log(a)));
             });
           }
         }
       }},
      {"shift-phi", nullptr, 1e-10,
       [](Tally& tally, const CheckConfig&) {
         const Complex lambdas[] = {0.5, -0.5, 0.3, Complex(0.2, 0.2), -1.0};
         for (Complex lv : lambdas) {
           const LambdaParam lam(lv);
           for (Complex s : {Complex(0.5), Complex(1.0), Complex(2.5), Complex(-1.5)}) {
             if (std::abs(lv) >= 1.0 && s.real() <= 0.0) continue;
             for (Complex a : oracle_a()) {
               tally.point("lambda=" + str(lv) + " s=" + str(s) + " a=" + str(a), [&] {
                 const Complex rhs = std::exp(-s * std::log(a)) + lv * lerch_phi(lam, s, AParam(a + 1.0)).value;
                 return deviation(lerch_phi(lam, s, AParam(a)).value, rhs);
               });
             }
           }
         }
       }},
      {"polylog", nullptr, 1e-10,
       [](Tally& tally, const CheckConfig&) {
         const Complex lambdas[] = {0.5, -0.5, 0.3, Complex(0.2, 0.2)};
         for (Complex lv : lambdas) {
           for (double s : {1.0, 2.0, 3.5}) {
             tally.point("lambda=" + str(lv) + " s=" + str(s), [&] {
               Complex brute = 0.0;
               Complex lam_pow = lv;
               for (int m = 1; m < 2000; ++m) {
                 brute += lam_pow * std::pow(static_cast<double>(m), -s);
                 lam_pow *= lv;
               }
               return deviation(lv * lerch_phi(LambdaParam(lv), s, AParam(1.0)).value, brute);
             });
           }
         }
       }},
      {"g-derivative", "eq2.9", 1e-6,
       [](Tally& tally, const CheckConfig&) {
         const double h = 1e-5;
         for (int m = 1; m <= 3; ++m) {
           for (double a : {1.0, 2.5}) {
             tally.point("m=" + std::to_string(m) + " a=" + str(a), [&] {
               const Complex diff = (g(m, AParam(a + h)).value - g(m, AParam(a - h)).value) / (2.0 * h);
               return std::abs(diff - static_cast<double>(m) * g(m - 1, AParam(a)).value);
             });
           }
         }
       }},
      {"g-integral", "eq2.10", 1e-8,
       [](Tally& tally, const CheckConfig&) {
         for (int m = 1; m <= 3; ++m) {
           for (Complex a : {Complex(1.0), Complex(2.0), Complex(2.5), Complex(1.0, 0.5)}) {
             for (Complex t : {Complex(0.25), Complex(0.5), Complex(0.2, 0.3)}) {
               tally.point("m=" + std::to_string(m) + " a=" + str(a) + " t=" + str(t), [&] {
                 return deviation(g_integral_rule(m, AParam(a), t), g_integral_quadrature(m, AParam(a), t).value);
               });
             }
           }
         }
       }},
      {"barnes-diff", nullptr, 1e-9,
       [](Tally& tally, const CheckConfig&) {
         const Complex ss[] = {0.5, 1.0, 1.5, 2.5, 3.7, Complex(1.0, 0.5), Complex(2.0, -1.5)};
         for (Complex s : ss) {
           tally.point("s=" + str(s), [&] {
             return deviation(barnes_log_g(AParam(s + 1.0)).value,
                              barnes_log_g(AParam(s)).value + log_gamma(s).value);
           });
         }
       }},
      {"barnes-poly", nullptr, 1e-10,
       [](Tally& tally, const CheckConfig&) {
         for (Complex a : oracle_a()) {
           tally.point("a=" + str(a), [&] {
             return deviation(barnes_log_g_poly(AParam(a)), barnes_log_g(AParam(a)).value);
           });
         }
       }},
      {"reflection", nullptr, 1e-12,
       [](Tally& tally, const CheckConfig&) {
         for (int i = 1; i <= 9; ++i) {
           const double s = 0.1 * i;
           tally.point("s=" + str(s), [&] {
             const Complex prod = std::exp(log_gamma(s).value + log_gamma(1.0 - s).value) * std::sin(kPi * s) / kPi;
             return deviation(prod, 1.0);
           });
         }
       }},
      {"psi-int", nullptr, 1e-12,
       [](Tally& tally, const CheckConfig&) {
         for (int n = 0; n <= 30; ++n) {
           tally.point("n=" + std::to_string(n),
                       [&] { return deviation(psi_int(n), digamma(static_cast<double>(n + 1)).value); });
         }
       }},
      {"zeta-neg-int", nullptr, 1e-10,
       [](Tally& tally, const CheckConfig&) {
         const Complex as[] = {0.5, 1.0, 1.5, 2.5, Complex(1.0, 1.0)};
         for (int n = 0; n <= 12; ++n) {
           for (Complex a : as) {
             tally.point("n=" + std::to_string(n) + " a=" + str(a), [&] {
               return deviation(zeta_neg_int(n, AParam(a)), hurwitz_zeta(-static_cast<double>(n), AParam(a)).value);
             });
           }
         }
       }},
      {"spot", nullptr, 1e-10, spot_values},
  };
  return entries;
}

const Entry& find_entry(std::string_view id) {
  for (const Entry& e : registry()) {
    if (id == e.id || (e.alias != nullptr && id == e.alias)) return e;
  }
  throw DomainError("unknown identity id '" + std::string(id) + "'");
}

}  // namespace

std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (const Entry& e : registry()) out.emplace_back(e.id);
  return out;
}

std::string canonical_check_id(std::string_view id) { return find_entry(id).id; }

std::vector<std::string> resolve_check_ids(const std::vector<std::string>& ids) {
  std::vector<std::string> out;
  for (const std::string& id : ids) {
    if (id == "all") {
      for (const std::string& all : check_ids()) out.push_back(all);
    } else {
      out.push_back(canonical_check_id(id));
    }
  }
  return out;
}

CheckReport run_check(std::string_view id, const CheckConfig& cfg) {
  const Entry& entry = find_entry(id);
  const auto start = std::chrono::steady_clock::now();
  Tally tally;
  entry.run(tally, cfg);
  const auto stop = std::chrono::steady_clock::now();
  CheckReport r;
  r.id = entry.id;
  r.grid_size = tally.size();
  r.max_deviation = tally.max();
  r.tolerance = entry.tolerance;
  r.passed = tally.size() > 0 && tally.max() <= entry.tolerance;
  r.wall_seconds = std::chrono::duration<double>(stop - start).count();
  r.worst_point = tally.worst();
  r.failure = tally.failure();
  return r;
}

}  // namespace zetasum

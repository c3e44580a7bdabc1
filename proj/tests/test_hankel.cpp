#include <cmath>

#include "support.hpp"
#include "zetasum/hankel.hpp"
#include "zetasum/lerch.hpp"
#include "zetasum/special_core.hpp"

using namespace zetasum;
using zt::check_close;

TEST_SUITE("hankel") {
  TEST_CASE("zeta family") {
    check_close(hankel_zeta_family(ZetaSelector::cont, 0.5, AParam(1.0)).value, -1.4603545088095868, 1e-10);
    check_close(hankel_zeta_family(ZetaSelector::cont, {-3, 1}, AParam(Complex(0.7, 0.4))).value,
                {-0.11434443887489334, 0.07962416432613499}, 1e-10);
    check_close(hankel_zeta_family(ZetaSelector::neg, 1.0, AParam(1.0)).value, -1.0 / 12.0, 1e-12);
    check_close(hankel_zeta_family(ZetaSelector::pos, 1.0, AParam(1.0)).value, M_PI * M_PI / 6.0, 1e-10);
    check_close(hankel_zeta_family(ZetaSelector::g, 1.0, AParam(1.0)).value, -0.2006531716253232, 1e-10);
    check_close(hankel_zeta_family(ZetaSelector::zprime_neg1, 0.0, AParam(1.0)).value,
                hurwitz_zeta_sderiv(-1.0, AParam(1.0)).value, 1e-10);
    CHECK_THROWS_AS(hankel_zeta_family(ZetaSelector::cont, 1.0, AParam(1.0)), PoleError);
    CHECK_THROWS_AS(hankel_zeta_family(ZetaSelector::cont, 3.0, AParam(1.0)), DomainError);
    CHECK_THROWS_AS(hankel_zeta_family(ZetaSelector::neg, 0.5, AParam(1.0)), DomainError);
  }

  TEST_CASE("gamma family") {
    const Complex x(2, 3);
    check_close(hankel_gamma_family(GammaSelector::psi_combined, x).value, digamma(x).value, 1e-10);
    check_close(hankel_gamma_family(GammaSelector::psi_direct, 0.3).value, -3.502524222200133, 1e-10);
    check_close(hankel_gamma_family(GammaSelector::psi_plus_gamma, 0.3).value,
                -3.502524222200133 + literal::euler_gamma, 1e-10);
    check_close(hankel_gamma_family(GammaSelector::inv_gamma, 4.0).value, 1.0 / 6.0, 1e-12);
    check_close(hankel_gamma_family(GammaSelector::gamma_const, 0.0).value, literal::euler_gamma, 1e-12);
    check_close(hankel_gamma_family(GammaSelector::log_gamma, 0.3).value, 1.0957979948180756, 1e-10);
    CHECK_THROWS_AS(hankel_gamma_family(GammaSelector::log_gamma, -0.5), DomainError);
  }

  TEST_CASE("Lerch family and Barnes G") {
    check_close(hankel_lerch_family(LerchSelector::phi_cont, LambdaParam(-0.5), 0.5, AParam(0.7)).value,
                0.9187670985738425, 1e-10);
    check_close(hankel_lerch_family(LerchSelector::phi_cont, LambdaParam(-1.0), 0.5, AParam(1.0)).value,
                0.6048986434216304, 1e-10);
    check_close(hankel_lerch_family(LerchSelector::phi_one, LambdaParam(0.5), 0.0, AParam(1.0)).value,
                2.0 * std::log(2.0), 1e-10);
    const LambdaParam lam(Complex(0.3, -0.2));
    const Complex want = lerch_phi_sderiv(lam, -2.0, AParam(1.5)).value + psi_int(2) * lerch_phi_neg(lam, 2, AParam(1.5));
    check_close(hankel_lerch_family(LerchSelector::phi_deriv, lam, 2.0, AParam(1.5)).value, want, 1e-10);
    check_close(hankel_barnes(AParam(3.7)).value, 0.3852902057046429, 1e-10);
  }

  TEST_CASE("values do not depend on the circle radius") {
    const IntegrandKind kinds[] = {
        {KindTag::zeta_cont, Complex(-1.5, 0.5), 0, Complex(1.2, 0)},
        {KindTag::g_family, 0.0, 2, Complex(0.6, 0.3)},
        {KindTag::phi_cont, Complex(0.5, 0), 0, Complex(1, 0), Complex(-0.5, 0)},
    };
    for (const IntegrandKind& k : kinds) {
      ContourSpec base;
      const Complex ref = contour_integrate(k, base).value;
      for (double eps : {0.25, 0.5, 2.0, 3.0}) {
        ContourSpec spec;
        spec.epsilon = eps;
        check_close(contour_integrate(k, spec).value, ref, 1e-9);
      }
    }
  }

  TEST_CASE("rays cancel exactly for integer exponents without a logarithm") {
    IntegrandKind k{KindTag::zeta_neg};
    k.n = 3;
    k.a = 0.8;
    const ContourPieces pieces = contour_pieces(k, {});
    CHECK(pieces.rays == Complex(0.0, 0.0));
  }

  TEST_CASE("I(s) vanishes at integers s >= 2") {
    for (int s = 2; s <= 5; ++s) {
      IntegrandKind k{KindTag::I_of_s};
      k.s = double(s);
      k.a = 1.5;
      CHECK(std::abs(contour_integrate(k, {}).value) < 1e-10);
    }
  }

  TEST_CASE("effective radius stays inside the nearest Lerch pole") {
    IntegrandKind k{KindTag::phi_cont};
    k.s = 0.5;
    k.lambda = 0.5;  // pole at z = log 2
    ContourSpec spec;
    const double eps = effective_epsilon(k, spec);
    CHECK(eps < std::log(2.0));
    CHECK(eps > 0.0);
    k.lambda = -0.5;
    CHECK(effective_epsilon(k, spec) == spec.epsilon);
  }

  TEST_CASE("kind names round-trip") {
    for (KindTag t : {KindTag::I_of_s, KindTag::phi_deriv, KindTag::gamma_const, KindTag::log_G}) {
      CHECK(kind_from_string(to_string(t)) == t);
    }
    CHECK_THROWS_AS(kind_from_string("nonsense"), DomainError);
  }

  TEST_CASE("contour settings are validated") {
    ContourSpec bad;
    bad.epsilon = 7.0;
    CHECK_THROWS_AS(validate(bad), DomainError);
    bad = {};
    bad.n_ray = 1;
    CHECK_THROWS_AS(validate(bad), DomainError);
    bad = {};
    bad.n_circle = 7;
    CHECK_THROWS_AS(validate(bad), DomainError);
    bad = {};
    bad.tol = 0.0;
    CHECK_THROWS_AS(validate(bad), DomainError);
    CHECK_NOTHROW(validate(ContourSpec{}));
  }

  TEST_CASE("coarse rules are caught by node doubling") {
    ContourSpec coarse;
    coarse.n_ray = 2;
    coarse.n_circle = 2;
    coarse.tol = 1e-14;
    CHECK_THROWS_AS(hankel_zeta_family(ZetaSelector::cont, -2.5, AParam(0.3), coarse), ConvergenceError);
  }
}

#include <cmath>

#include "support.hpp"
#include "zetasum/integrals.hpp"
#include "zetasum/special_core.hpp"

using namespace zetasum;
using zt::check_close;

TEST_SUITE("integrals") {
  TEST_CASE("reference values") {
    check_close(log_gamma_moment({1.0, AParam(1.0), 2}), -0.023104286684944523, 1e-12);
    check_close(log_gamma_moment({0.5, AParam(2.0), 0}), 0.06534392151195563, 1e-12);
    check_close(psi_moment(0.4, AParam(1.0), 2), -0.09225332959525809, 1e-12);
    check_close(negative_polygamma(3, 1.5), 1.1594365677620342, 1e-11);
    check_close(negative_polygamma(1, 1.5), log_gamma(1.5).value, 1e-15);
  }

  TEST_CASE("closed forms agree with quadrature") {
    for (Complex a : {Complex(0.5, 0), Complex(1.5, 0.5), Complex(3, 0)}) {
      for (Complex t : {Complex(0.3, 0), Complex(1.2, 0), Complex(0.2, -0.4)}) {
        for (int m : {0, 1, 4}) {
          const MomentQuery q{t, AParam(a), m};
          check_close(log_gamma_moment(q), log_gamma_moment_quadrature(q).value, 1e-10);
        }
        for (int m : {1, 3}) check_close(g_integral_rule(m, AParam(a), t), g_integral_quadrature(m, AParam(a), t).value, 1e-10);
      }
    }
    for (int p : {1, 2, 5}) check_close(psi_moment(0.3, AParam(1.0), p), psi_moment_quadrature(0.3, AParam(1.0), p).value, 1e-10);
    for (int k = 1; k <= 6; ++k)
      for (double t : {0.5, 2.0}) check_close(negative_polygamma(k, t), negative_polygamma_quadrature(k, t).value, 1e-10);
  }

  TEST_CASE("three forms of the first moment agree") {
    const MomentQuery q{0.7, AParam(1.3), 0};
    const Complex g = log_gamma_integral_m0(q, M0Form::g_form);
    check_close(log_gamma_integral_m0(q, M0Form::zeta_form), g, 1e-12);
    check_close(log_gamma_integral_m0(q, M0Form::barnes_form), g, 1e-12);
    check_close(log_gamma_moment(q), g, 1e-12);
    CHECK_THROWS_AS(log_gamma_integral_m0({0.7, AParam(1.3), 1}, M0Form::g_form), DomainError);
  }

  TEST_CASE("moment derivative recovers the integrand") {
    const double h = 1e-5;
    for (int m : {0, 2, 5}) {
      const double t = 0.8;
      const AParam a(1.2);
      const Complex fd = (log_gamma_moment({t + h, a, m}) - log_gamma_moment({t - h, a, m})) / (2 * h);
      check_close(fd, std::pow(t, m) * log_gamma(1.2 + t).value, 1e-8);
    }
  }

  TEST_CASE("negative polygamma chain") {
    // d/dt Psi^(-k)(t) = Psi^(-(k-1))(t)
    const double h = 1e-5;
    for (int k = 2; k <= 5; ++k) {
      const double t = 1.7;
      const Complex fd = (negative_polygamma(k, t + h) - negative_polygamma(k, t - h)) / (2 * h);
      check_close(fd, negative_polygamma(k - 1, t), 1e-8);
    }
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(log_gamma_moment({-2.0, AParam(1.0), 0}), DomainError);
    CHECK_THROWS_AS(log_gamma_moment({0.5, AParam(1.0), 21}), OrderTooLargeError);
    CHECK_THROWS_AS(negative_polygamma(2, -1.0), DomainError);
    CHECK_THROWS_AS(negative_polygamma(11, 1.0), OrderTooLargeError);
    CHECK_THROWS_AS(psi_moment(0.5, AParam(1.0), 0), DomainError);
    CHECK_THROWS_AS(g_integral_rule(0, AParam(1.0), 0.5), DomainError);
  }
}

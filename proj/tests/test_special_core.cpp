#include <cmath>

#include "support.hpp"
#include "zetasum/special_core.hpp"

using namespace zetasum;
using zt::check_close;

TEST_SUITE("special_core") {
  TEST_CASE("Bernoulli numbers are exact rationals") {
    CHECK(bernoulli_number(0) == 1.0);
    CHECK(bernoulli_number(1) == -0.5);
    CHECK(bernoulli_number(2) == 1.0 / 6.0);
    CHECK(bernoulli_number(3) == 0.0);
    CHECK(bernoulli_number(12) == -691.0 / 2730.0);
    CHECK(bernoulli_number(59) == 0.0);
    CHECK_THROWS_AS(bernoulli_number(61), OrderTooLargeError);
    CHECK_THROWS_AS(bernoulli_number(-1), DomainError);
  }

  TEST_CASE("Bernoulli polynomials") {
    check_close(bernoulli_poly(2, 0.5), -1.0 / 12.0, 1e-15);
    check_close(bernoulli_poly(3, 1.0), 0.0, 1e-15);
    // B_n(x + 1) - B_n(x) = n x^(n-1)
    for (int n = 1; n <= 12; ++n) {
      const Complex x(0.3, -0.7);
      check_close(bernoulli_poly(n, x + 1.0) - bernoulli_poly(n, x), double(n) * std::pow(x, n - 1), 1e-12);
    }
  }

  TEST_CASE("Stirling numbers of the second kind") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(5, 0) == 0);
    CHECK(stirling2(5, 2) == 15);
    CHECK(stirling2(10, 5) == 42525);
    CHECK(stirling2(26, 13) == 1850568574253550060ull);
    CHECK_THROWS_AS(stirling2(41, 3), OverflowError);
    CHECK_THROWS_AS(stirling2(30, 15), OverflowError);
    CHECK(stirling2_real(30, 15) == doctest::Approx(1.287986807277062604e22).epsilon(1e-15));
    // Row sums are the Bell numbers.
    std::uint64_t bell = 0;
    for (int k = 0; k <= 15; ++k) bell += stirling2(15, k);
    CHECK(bell == 1382958545ull);
  }

  TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(60, 30) == 118264581564861424ull);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK_THROWS_AS(binomial(61, 2), OrderTooLargeError);
  }

  TEST_CASE("geometric polynomials") {
    check_close(geometric_poly(0, 2.0), 1.0, 0.0);
    // omega_2(x) = x + 2 x^2
    const Complex x(0.4, 0.3);
    check_close(geometric_poly(2, x), x + 2.0 * x * x, 1e-15);
  }

  TEST_CASE("digamma and log-gamma against reference values") {
    check_close(digamma(0.3).value, -3.502524222200133, 1e-14);
    check_close(digamma({2, 3}).value, {1.2079807107101508, 1.1041296805875762}, 1e-14);
    check_close(log_gamma(0.3).value, 1.0957979948180756, 1e-14);
    check_close(log_gamma({5, 7}).value, {-1.0451080801207848, 12.333806991474976}, 1e-14);
    CHECK(psi_int(0) == doctest::Approx(-literal::euler_gamma).epsilon(1e-16));
    CHECK_THROWS_AS(digamma(-2.0), PoleError);
    CHECK_THROWS_AS(log_gamma(0.0), PoleError);
  }

  TEST_CASE("digamma and log-gamma recurrences") {
    for (Complex x : {Complex(0.2, 0), Complex(1.7, 2.5), Complex(-2.3, 0.4), Complex(12, -9)}) {
      check_close(digamma(x + 1.0).value, digamma(x).value + 1.0 / x, 1e-13);
      const Complex step = log_gamma(x + 1.0).value - log_gamma(x).value - std::log(x);
      // Principal branches may differ by a multiple of 2 pi i.
      CHECK(std::abs(step.real()) < 1e-12);
      const double turns = step.imag() / (2 * M_PI);
      CHECK(std::abs(turns - std::round(turns)) < 1e-12);
    }
  }

  TEST_CASE("Hurwitz zeta against reference values") {
    check_close(hurwitz_zeta(0.5, AParam(1.0)).value, -1.4603545088095868, 1e-14);
    check_close(hurwitz_zeta(2.5, AParam(0.3)).value, 21.069239202247726, 1e-14);
    check_close(hurwitz_zeta(-1.5, AParam(2.0)).value, -1.025485201889833, 1e-14);
    check_close(hurwitz_zeta({1, 2}, AParam(1.5)).value, {-0.05383827731162061, -0.5672744529474878}, 1e-14);
    check_close(hurwitz_zeta({-3, 1}, AParam(Complex(0.7, 0.4))).value, {-0.11434443887489334, 0.07962416432613499},
                1e-13);
    check_close(hurwitz_zeta(30.0, AParam(1.2)).value, 0.00421272028646088, 1e-15);
    CHECK_THROWS_AS(hurwitz_zeta(1.0, AParam(1.0)), PoleError);
    CHECK_THROWS_AS(AParam(0.0), DomainError);
    CHECK_THROWS_AS(AParam(Complex(-1.0, 2.0)), DomainError);
  }

  TEST_CASE("Hurwitz zeta s-derivative against reference values") {
    check_close(hurwitz_zeta_sderiv(0.5, AParam(1.0)).value, -3.9226461392091516, 1e-13);
    check_close(hurwitz_zeta_sderiv(-2.0, AParam(0.5)).value, 0.022836342793794952, 1e-13);
    check_close(hurwitz_zeta_sderiv(3.0, AParam(Complex(2, 1))).value, {-0.1452564101806285, 0.11383860456956696},
                1e-13);
  }

  TEST_CASE("zeta shift property") {
    for (Complex s : {Complex(-4.5, 0), Complex(0.3, 0), Complex(2.5, 1), Complex(-1, -3)}) {
      for (Complex a : {Complex(0.4, 0), Complex(1.5, 0.5), Complex(3, 0)}) {
        const Complex lhs = hurwitz_zeta(s, AParam(a)).value - hurwitz_zeta(s, AParam(a + 1.0)).value;
        check_close(lhs, std::pow(a, -s), 1e-12);
      }
    }
  }

  TEST_CASE("zeta at nonpositive integers is the Bernoulli polynomial") {
    for (int n = 0; n <= 20; ++n) {
      const AParam a(0.75);
      check_close(zeta_neg_int(n, a), -bernoulli_poly(n + 1, 0.75) / double(n + 1), 1e-15);
      check_close(hurwitz_zeta(double(-n), a).value, zeta_neg_int(n, a), 1e-12);
    }
    CHECK(zeta_neg_int(1, AParam(1.0)).real() == doctest::Approx(-1.0 / 12.0).epsilon(1e-16));
  }

  TEST_CASE("g family") {
    check_close(g(1, AParam(1.0)).value, -0.2006531716253232, 1e-13);
    check_close(g(3, AParam(Complex(0.5, 0.5))).value, {-0.08653945448345916, 0.0845635575485876}, 1e-13);
    // g(n, a) = zeta'(-n, a) + psi(n + 1) zeta(-n, a)
    for (int n = 0; n <= 6; ++n) {
      const AParam a(1.3);
      const Complex want = hurwitz_zeta_sderiv(double(-n), a).value + psi_int(n) * zeta_neg_int(n, a);
      check_close(g(n, a).value, want, 1e-12);
    }
  }

  TEST_CASE("Barnes G") {
    check_close(barnes_log_g(AParam(1.0)).value, 0.0, 1e-15);
    check_close(barnes_log_g(AParam(2.0)).value, 0.0, 1e-15);
    check_close(barnes_log_g(AParam(0.5)).value, -0.5054330544896953, 1e-13);
    check_close(barnes_log_g(AParam(3.7)).value, 0.3852902057046429, 1e-13);
    check_close(barnes_log_g(AParam(Complex(1, 1))).value, {0.5899450200184994, 0.003723946002978137}, 1e-13);
    // log G(a + 1) - log G(a) = log Gamma(a)
    for (double a : {0.3, 1.5, 4.25}) {
      check_close(barnes_log_g(AParam(a + 1)).value - barnes_log_g(AParam(a)).value, log_gamma(a).value, 1e-12);
      check_close(barnes_log_g_poly(AParam(a)), barnes_log_g(AParam(a)).value, 1e-12);
    }
  }

  TEST_CASE("derived constants agree with their literals") {
    const Constants& c = constants();
    CHECK(std::abs(c.gamma - literal::euler_gamma) < 1e-14);
    CHECK(std::abs(c.log_sqrt_2pi - literal::log_sqrt_2pi) < 1e-14);
    CHECK(std::abs(c.log_glaisher - literal::log_glaisher) < 1e-13);
  }
}

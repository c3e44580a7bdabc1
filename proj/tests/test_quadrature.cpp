#include <cmath>

#include "support.hpp"
#include "zetasum/quadrature.hpp"

using namespace zetasum;

TEST_SUITE("quadrature") {
  TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
    for (int n : {2, 5, 16, 33, 64}) {
      const GaussRule rule = gauss_legendre(n);
      REQUIRE(rule.nodes.size() == std::size_t(n));
      for (int deg = 0; deg <= 2 * n - 1; deg += 3) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], deg);
        const double want = deg % 2 ? 0.0 : 2.0 / (deg + 1);
        CHECK(std::abs(sum - want) < 1e-14);
      }
    }
    CHECK_THROWS_AS(gauss_legendre(1), DomainError);
    CHECK_THROWS_AS(gauss_legendre(65), DomainError);
  }

  TEST_CASE("cached rules are stable") {
    const GaussRule a = gauss_legendre(20);
    const GaussRule b = gauss_legendre(20);
    CHECK(a.nodes.data() == b.nodes.data());
  }

  TEST_CASE("adaptive interval quadrature tolerates endpoint singularities") {
    const EvalResult r = integrate_interval([](double x) { return Complex(std::log(x), 0.0); }, 0.0, 1.0);
    CHECK(std::abs(r.value.real() + 1.0) < 1e-12);
    const EvalResult s = integrate_interval([](double x) { return Complex(1.0 / std::sqrt(x), x); }, 0.0, 4.0);
    zt::check_close(s.value, {4.0, 8.0}, 1e-10);
  }

  TEST_CASE("half-line and segment quadrature") {
    const EvalResult r = real_axis_quadrature([](double x) { return Complex(x * x * std::exp(-x), 0.0); });
    zt::check_close(r.value, 2.0, 1e-12);
    const EvalResult s = integrate_segment([](Complex z) { return z * z; }, {0, 0}, {1, 1});
    zt::check_close(s.value, std::pow(Complex(1, 1), 3) / 3.0, 1e-14);
  }
}

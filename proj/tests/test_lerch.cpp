#include <cmath>

#include "support.hpp"
#include "zetasum/lerch.hpp"
#include "zetasum/special_core.hpp"

using namespace zetasum;
using zt::check_close;

namespace {

Complex direct_sum(Complex lambda, Complex s, Complex a, int terms) {
  Complex sum = 0.0, pw = 1.0;
  for (int n = 0; n < terms; ++n, pw *= lambda) sum += pw * std::pow(double(n) + a, -s);
  return sum;
}

}  // namespace

TEST_SUITE("lerch") {
  TEST_CASE("Phi against reference values") {
    check_close(lerch_phi(LambdaParam(0.5), 2.0, AParam(1.0)).value, 1.164481052930025, 1e-14);
    check_close(lerch_phi(LambdaParam(-0.5), 0.5, AParam(0.7)).value, 0.9187670985738425, 1e-14);
    check_close(lerch_phi(LambdaParam(Complex(0.3, 0.4)), -1.5, AParam(2.0)).value,
                {2.145633787434562, 3.382916086601968}, 1e-13);
  }

  TEST_CASE("Phi on the unit circle") {
    check_close(lerch_phi(LambdaParam(-1.0), 0.5, AParam(1.0)).value, 0.6048986434216304, 1e-13);
    check_close(lerch_phi(LambdaParam(Complex(0, 1)), 2.0, AParam(0.5)).value,
                {3.8741843919967267, 0.38475229217728685}, 1e-13);
    CHECK_THROWS_AS(lerch_phi(LambdaParam(-1.0), -0.5, AParam(1.0)), DomainError);
    CHECK_THROWS_AS(LambdaParam(1.0), DomainError);
    CHECK_THROWS_AS(LambdaParam(1.01), DomainError);
  }

  TEST_CASE("Phi s-derivative against reference values") {
    check_close(lerch_phi_sderiv(LambdaParam(0.5), -2.0, AParam(1.0)).value, -15.55047057870002, 1e-12);
    check_close(lerch_phi_sderiv(LambdaParam(-0.5), 1.5, AParam(2.0)).value, -0.17001063397751254, 1e-13);
  }

  TEST_CASE("Phi shift property") {
    for (Complex lam : {Complex(0.5, 0), Complex(-0.8, 0), Complex(0.2, 0.6)}) {
      for (Complex s : {Complex(2, 0), Complex(-1.5, 0.5), Complex(0.5, -1)}) {
        const Complex a(0.8, 0.3);
        const Complex lhs = lerch_phi(LambdaParam(lam), s, AParam(a)).value;
        const Complex rhs = std::pow(a, -s) + lam * lerch_phi(LambdaParam(lam), s, AParam(a + 1.0)).value;
        check_close(lhs, rhs, 1e-12);
      }
    }
  }

  TEST_CASE("Phi at lambda = 0 reduces to a^-s") {
    check_close(lerch_phi(LambdaParam(0.0), 1.5, AParam(2.0)).value, std::pow(2.0, -1.5), 1e-15);
  }

  TEST_CASE("closed form at negative integers matches the direct sum") {
    for (int m = 0; m <= 8; ++m) {
      for (Complex lam : {Complex(0.5, 0), Complex(-0.3, 0.2)}) {
        const Complex want = direct_sum(lam, double(-m), 1.25, 400);
        check_close(lerch_phi_neg(LambdaParam(lam), m, AParam(1.25)), want, 1e-11);
      }
    }
    check_close(lerch_phi_neg(LambdaParam(0.5), 0, AParam(1.0)), 2.0, 1e-15);
    check_close(lerch_phi_neg(LambdaParam(0.5), 1, AParam(1.0)), 4.0, 1e-15);
    check_close(lerch_phi_neg(LambdaParam(0.5), 2, AParam(1.0)), 12.0, 1e-15);
    CHECK_THROWS_AS(lerch_phi_neg(LambdaParam(-1.0), 1, AParam(1.0)), DomainError);
  }

  TEST_CASE("power-weighted geometric sums") {
    for (int q = 0; q <= 10; ++q) {
      const Complex mu(0.3, -0.4);
      Complex want = 0.0, pw = 1.0;
      for (int n = 0; n < 300; ++n, pw *= mu) want += std::pow(double(n), q) * pw;
      if (q == 0) want = 1.0 / (1.0 - mu);
      check_close(power_geometric_sum(q, mu), want, 1e-11);
    }
  }

  TEST_CASE("auxiliary function l") {
    check_close(l_function(LambdaParam(0.5), AParam(1.0), LMethod::series).value, -1.0156678457368769, 1e-13);
    check_close(l_function(LambdaParam(-0.3), AParam(2.5), LMethod::series).value, -0.6412513339661696, 1e-13);
    for (Complex lam : {Complex(0.5, 0), Complex(-0.7, 0), Complex(0.1, 0.5)}) {
      const AParam a(Complex(1.5, 0.5));
      check_close(l_function(LambdaParam(lam), a, LMethod::integral).value,
                  l_function(LambdaParam(lam), a, LMethod::series).value, 1e-10);
    }
  }

  TEST_CASE("s-derivative at negative integers: both closed forms and the series") {
    for (int m = 0; m <= 5; ++m) {
      const LambdaParam lam(Complex(0.4, 0.2));
      const AParam a(1.5);
      const Complex p2 = lerch_phi_sderiv_neg(lam, m, a, SDerivMethod::l_derivatives).value;
      const Complex p3 = lerch_phi_sderiv_neg(lam, m, a, SDerivMethod::kernel_integral).value;
      check_close(p2, p3, 1e-9);
      check_close(p2, lerch_phi_sderiv(lam, double(-m), a).value, 1e-10);
    }
  }

  TEST_CASE("lambda-derivative operator applied to the geometric series") {
    // (lambda d/dlambda)^q 1/(1-lambda) = sum n^q lambda^n
    const Complex lam(0.35, 0.1);
    for (int q = 0; q <= 6; ++q) {
      auto deriv = [](int p, Complex x) {
        double f = 1.0;
        for (int i = 2; i <= p; ++i) f *= i;
        return f / std::pow(1.0 - x, p + 1);
      };
      check_close(lambda_derivative_operator(q, lam, deriv), power_geometric_sum(q, lam), 1e-12);
    }
  }

  TEST_CASE("kernel is finite at the origin") {
    const Complex k = lerch_kernel(2, {0.5, 0}, {1.0, 0}, 1e-12);
    CHECK(is_finite(k));
  }

  TEST_CASE("slow convergence is reported, not hidden") {
    LerchConfig tight;
    tight.max_terms = 50;
    CHECK_THROWS_AS(lerch_phi(LambdaParam(0.99), 2.0, AParam(1.0), tight), ConvergenceError);
  }
}

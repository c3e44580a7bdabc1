#pragma once

#include <functional>

#include "zetasum/types.hpp"

// The Lerch transcendent Phi(lambda, s, a) = sum_n lambda^n / (n + a)^s and
// closed forms for Phi and its s-derivative at nonpositive integers s = -m,
// written in terms of geometric polynomials and the auxiliary function
// l(lambda, a) = -sum_n lambda^n log(n + a).

namespace zetasum {

/// Term budget and target accuracy for the direct series. Above the budget
/// the evaluation fails with ConvergenceError instead of switching algorithm.
struct LerchConfig {
  long max_terms = 100000;
  double rel_tol = 1e-15;
};

EvalResult lerch_phi(LambdaParam lambda, Complex s, AParam a, const LerchConfig& cfg = {});

/// d/ds Phi(lambda, s, a) by direct summation of -sum lambda^n log(n+a) (n+a)^-s.
EvalResult lerch_phi_sderiv(LambdaParam lambda, Complex s, AParam a, const LerchConfig& cfg = {});

/// Phi(lambda, -m, a) through geometric polynomials; requires |lambda| < 1.
Complex lerch_phi_neg(LambdaParam lambda, int m, AParam a);

/// sum_{n>=0} n^q mu^n = omega_q(mu / (1 - mu)) / (1 - mu) for |mu| < 1.
Complex power_geometric_sum(int q, Complex mu);

enum class LMethod { series, integral };

EvalResult l_function(LambdaParam lambda, AParam a, LMethod method);

/// p-th lambda-derivative of l(lambda, a), summed term-wise.
EvalResult l_derivative(int p, LambdaParam lambda, AParam a, const LerchConfig& cfg = {});

/// (lambda d/dlambda)^q f at lambda, as sum_p {q p} lambda^p f^(p)(lambda).
/// `derivative(p, lambda)` must return f^(p)(lambda).
Complex lambda_derivative_operator(int q, Complex lambda, const std::function<Complex(int, Complex)>& derivative);

enum class SDerivMethod { l_derivatives, kernel_integral };

/// Phi'_s(lambda, -m, a); l_derivatives sums lambda-derivatives of l, kernel_integral
/// integrates the geometric-polynomial weighted kernel over (0, inf).
EvalResult lerch_phi_sderiv_neg(LambdaParam lambda, int m, AParam a, SDerivMethod method);

/// Kernel of the kernel_integral path: sum_q C(m,q) a^(m-q) [e^{-at} F_q(lambda e^{-t})
/// - e^{-t} F_q(lambda)] / t with F_q(mu) = sum_n n^q mu^n. Finite as t -> 0+.
Complex lerch_kernel(int m, Complex lambda, Complex a, double t);

}  // namespace zetasum

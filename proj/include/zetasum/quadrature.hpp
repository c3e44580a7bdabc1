#pragma once

#include <functional>
#include <span>

#include "zetasum/types.hpp"

// Adaptive Gauss-Kronrod quadrature for complex-valued integrands of a real
// variable, plus the fixed Gauss-Legendre rule used by the contour engine.

namespace zetasum {

using RealIntegrand = std::function<Complex(double)>;
using PathIntegrand = std::function<Complex(Complex)>;

struct QuadratureConfig {
  double rel_tol = 1e-13;
  double abs_tol = 1e-15;
  int max_panels = 4000;
};

/// Globally adaptive 21-point Gauss-Kronrod on [lo, hi]. Endpoints are never
/// sampled, so integrable endpoint singularities (log, power) are tolerated.
EvalResult integrate_interval(const RealIntegrand& f, double lo, double hi, const QuadratureConfig& cfg = {});

/// Integral over (0, inf): panels [0,1], [1,2], [2,4], ... each adaptively
/// integrated, stopping once two consecutive panels fall below tol relative
/// to the running total.
EvalResult real_axis_quadrature(const RealIntegrand& f, double tol = 1e-13);

/// Integral of f along the straight segment from `from` to `to`.
EvalResult integrate_segment(const PathIntegrand& f, Complex from, Complex to, const QuadratureConfig& cfg = {});

/// n-point Gauss-Legendre rule on [-1, 1]; tables are cached for the life of
/// the process, so the spans stay valid.
struct GaussRule {
  std::span<const double> nodes;
  std::span<const double> weights;
};
GaussRule gauss_legendre(int n);

}  // namespace zetasum

#include "zetasum/types.hpp"

#include <cmath>
#include <sstream>

namespace zetasum {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::series:
      return "series";
    case Method::euler_maclaurin:
      return "euler_maclaurin";
    case Method::contour:
      return "contour";
    case Method::closed_form:
      return "closed_form";
    case Method::quadrature:
      return "quadrature";
  }
  return "unknown";
}

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool is_integer(Complex z) { return z.imag() == 0.0 && std::nearbyint(z.real()) == z.real(); }

double deviation(Complex x, Complex ref) { return std::abs(x - ref) / (1.0 + std::abs(ref)); }

AParam::AParam(Complex value) : value_(value) {
  if (!is_finite(value) || !(value.real() > 0.0)) {
    std::ostringstream msg;
    msg << "parameter a must satisfy Re(a) > 0, got " << value;
    throw DomainError(msg.str());
  }
}

LambdaParam::LambdaParam(Complex value) : value_(value) {
  if (!is_finite(value) || std::abs(value) > 1.0 || value == Complex(1.0, 0.0)) {
    std::ostringstream msg;
    msg << "parameter lambda must satisfy |lambda| <= 1, lambda != 1, got " << value;
    throw DomainError(msg.str());
  }
}

void LambdaParam::require_inside_disc(std::string_view op) const {
  if (!(std::abs(value_) < 1.0)) {
    std::ostringstream msg;
    msg << op << " requires |lambda| < 1, got " << value_;
    throw DomainError(msg.str());
  }
}

}  // namespace zetasum

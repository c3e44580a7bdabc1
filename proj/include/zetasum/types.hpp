#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zetasum {

using Complex = std::complex<double>;

/// Names the code path that produced a value.
enum class Method { series, euler_maclaurin, contour, closed_form, quadrature };

std::string_view to_string(Method m);

/// A computed value together with an estimate of its absolute error.
struct EvalResult {
  Complex value;
  double abs_err = 0.0;
  Method method = Method::closed_form;
};

// Error hierarchy. The CLI maps DomainError (and subclasses) to exit code 2
// and ConvergenceError to exit code 3.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OrderTooLargeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverflowError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, Complex best, double err_bound)
      : Error(what), best_(best), err_bound_(err_bound) {}

  /// Best available value at the point the budget ran out.
  Complex best() const { return best_; }
  double error_bound() const { return err_bound_; }

 private:
  Complex best_;
  double err_bound_;
};

/// The shift parameter a of the zeta family; always Re(a) > 0.
class AParam {
 public:
  explicit AParam(Complex value);
  explicit AParam(double value) : AParam(Complex(value, 0.0)) {}

  Complex value() const { return value_; }
  double re() const { return value_.real(); }

 private:
  Complex value_;
};

/// The geometric weight of the Lerch transcendent; |lambda| <= 1, lambda != 1.
class LambdaParam {
 public:
  explicit LambdaParam(Complex value);
  explicit LambdaParam(double value) : LambdaParam(Complex(value, 0.0)) {}

  Complex value() const { return value_; }
  double modulus() const { return std::abs(value_); }

  /// Throws DomainError unless |lambda| < 1.
  void require_inside_disc(std::string_view op) const;

 private:
  Complex value_;
};

bool is_finite(Complex z);

/// True when z is (numerically exactly) a real integer.
bool is_integer(Complex z);

/// |x - ref| / (1 + |ref|), the deviation measure used by every identity check.
double deviation(Complex x, Complex ref);

}  // namespace zetasum

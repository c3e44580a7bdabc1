#pragma once

#include <doctest.h>

#include "zetasum/types.hpp"

namespace zt {

using zetasum::Complex;

// Relative-or-absolute closeness, the same measure the identity suites use.
inline void check_close(Complex got, Complex want, double tol) {
  const double dev = zetasum::deviation(got, want);
  INFO("got (" << got.real() << ", " << got.imag() << ") want (" << want.real() << ", " << want.imag()
               << ") dev " << dev);
  CHECK(dev <= tol);
}

}  // namespace zt

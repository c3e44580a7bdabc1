#pragma once

#include <optional>

#include "zetasum/types.hpp"

// Closed forms and brute-force sums for the series
//   S(t, a, p) = sum_{n>=1} zeta(n+1, a) t^(n+p) / (n+p),
//   T(t, a, p) = sum_{n>=1} zeta(n+1, a) t^(n+p) / ((n+1)(n+2)...(n+p)),
//   L(t, a, p) = sum_{n>=0} Phi(lambda, n+1, a) t^(n+p) / (n+p).
// At p = 0 the S and L families mean the plain power series
// sum zeta(n+1, a) t^n (n >= 1) and sum Phi(lambda, n+1, a) t^n (n >= 0).

namespace zetasum {

inline constexpr int kMaxSeriesOrder = 30;

struct SeriesQuery {
  Complex t = 0.0;
  AParam a{1.0};
  int p = 1;
  std::optional<LambdaParam> lambda;
};

struct SeriesConfig {
  long max_terms = 100000;
  double rel_tol = 1e-12;
};

enum class SeriesFamily { S, T, LERCH };

Complex s_closed(const SeriesQuery& q);

/// p = 1 form t psi(a) + log Gamma(a - t) - log Gamma(a).
Complex s_closed_p1(Complex t, AParam a);

Complex t_closed(const SeriesQuery& q);

/// Requires q.lambda with |lambda| < 1; the order limit is 13.
Complex lerch_series_closed(const SeriesQuery& q);

/// Partial sums until the tail majorant drops below rel_tol |sum|. The
/// majorant uses |zeta(n+1, a)|, |Phi(lambda, n+1, a)| <= zeta(n+1, Re a)
/// <= (Re a)^-(n+1) (1 + Re a / n), geometric in |t| / Re a.
EvalResult series_bruteforce(SeriesFamily family, const SeriesQuery& q, const SeriesConfig& cfg = {});

}  // namespace zetasum

#pragma once

/**
 * @file special.hpp
 * @brief Error-function family and the auxiliary ratios used by the
 *        similarity solutions.
 *
 *   F1(x) = exp(-x^2) / erfc(x)     (x >= 0)
 *   F2(x) = exp(-x^2) / erf(x)      (x > 0, pole at 0)
 *
 * F1 is evaluated as 1 / erfcx(x) so that it stays finite for arguments where
 * exp(-x^2) and erfc(x) both underflow.
 */

#include <cmath>
#include <numbers>
#include <string>

#include "stefan_kit/error.hpp"

namespace stefan_kit::special {

namespace detail {

inline void require_finite(double x, const char* fn) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": non-finite argument");
  }
}

// exp(x*x) with the rounding error of the square folded back in.
inline double exp_square(double x) {
  const double hi = x * x;
  const double lo = std::fma(x, x, -hi);
  return std::exp(hi) * (1.0 + lo);
}

// erfcx(x) = (1/sqrt(pi)) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), modified Lentz.
inline double erfcx_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-17;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int n = 1; n < 5000; ++n) {
    const double a = 0.5 * n;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < eps) break;
  }
  return std::numbers::inv_sqrtpi / f;
}

}  // namespace detail

inline double erf(double x) {
  detail::require_finite(x, "erf");
  return std::erf(x);
}

inline double erfc(double x) {
  detail::require_finite(x, "erfc");
  return std::erfc(x);
}

/// Scaled complementary error function exp(x^2) erfc(x).
inline double erfcx(double x) {
  detail::require_finite(x, "erfcx");
  if (x < 3.0) {
    return detail::exp_square(x) * std::erfc(x);
  }
  return detail::erfcx_continued_fraction(x);
}

inline double F1(double x) {
  detail::require_finite(x, "F1");
  return 1.0 / erfcx(x);
}

/// Not regularized at 0: the divergence F2(0+) = +inf is what makes the
/// root of the Dirichlet-problem equation unique.
inline double F2(double x) {
  detail::require_finite(x, "F2");
  if (x <= 0.0) {
    throw DomainError("F2: pole at x = 0 (argument must be > 0)");
  }
  return std::exp(-x * x) / std::erf(x);
}

}  // namespace stefan_kit::special

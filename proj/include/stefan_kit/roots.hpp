#pragma once

/**
 * @file roots.hpp
 * @brief Bracketed root finding for strictly decreasing scalar functions.
 *
 * Both transcendental front equations are posed as g(x) = H(x) - x = 0 with
 * g strictly decreasing, so a sign-change bracket always contains exactly one
 * root. The solver alternates false-position (secant on the bracket ends) with
 * bisection whenever a secant step fails to halve the bracket, so it inherits
 * the unconditional convergence of bisection.
 */

#include <cmath>
#include <limits>
#include <string>

#include "stefan_kit/error.hpp"

namespace stefan_kit {

struct RootOptions {
  double residual_tol = 1e-12;  ///< |g(root)| bound
  double width_tol = 1e-13;     ///< final bracket width bound
  int max_iterations = 500;
};

/// Sign-change certificate: g(lo) >= 0 >= g(hi), degenerate when a root is hit exactly.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct RootResult {
  double root = 0.0;
  double residual = 0.0;  ///< |g(root)|
  Bracket bracket;
  int iterations = 0;
};

/// Root of a strictly decreasing g inside `start`. Requires g(start.lo) > 0 > g(start.hi).
template <class Fn>
RootResult find_decreasing_root(Fn&& g, Bracket start, const RootOptions& opts = {}) {
  double a = start.lo;
  double b = start.hi;
  double ga = g(a);
  double gb = g(b);
  if (!(a < b) || !(ga > 0.0) || !(gb < 0.0)) {
    throw SolverError("find_decreasing_root: interval is not a sign-change bracket");
  }

  RootResult out;
  bool force_bisection = false;
  double previous_width = b - a;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    out.iterations = it;
    const double mid = a + 0.5 * (b - a);
    double x = mid;
    if (!force_bisection && std::isfinite(ga) && std::isfinite(gb)) {
      const double secant = a - ga * (b - a) / (gb - ga);
      if (secant > a && secant < b) x = secant;
    }
    const double gx = g(x);
    if (!std::isfinite(gx)) {
      throw SolverError("find_decreasing_root: non-finite function value at x = " + std::to_string(x));
    }
    if (gx == 0.0) {
      out.root = x;
      out.residual = 0.0;
      out.bracket = {x, x};
      return out;
    }
    if (gx > 0.0) {
      a = x;
      ga = gx;
    } else {
      b = x;
      gb = gx;
    }

    const double width = b - a;
    force_bisection = width > 0.5 * previous_width;
    previous_width = width;

    const bool a_better = std::abs(ga) <= std::abs(gb);
    const double best = a_better ? a : b;
    const double best_residual = a_better ? std::abs(ga) : std::abs(gb);
    const double next_mid = a + 0.5 * (b - a);
    const bool exhausted = next_mid <= a || next_mid >= b;
    if ((best_residual <= opts.residual_tol && width <= opts.width_tol) || exhausted) {
      if (best_residual > opts.residual_tol) {
        throw SolverError("find_decreasing_root: residual tolerance not attainable in double precision");
      }
      out.root = best;
      out.residual = best_residual;
      out.bracket = {a, b};
      return out;
    }
  }
  throw SolverError("find_decreasing_root: iteration limit reached");
}

}  // namespace stefan_kit

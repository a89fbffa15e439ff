#pragma once

/**
 * @file neumann.hpp
 * @brief Two-phase solidification with a prescribed face temperature T_0 < T_f.
 *
 * The front coefficient xi is the unique positive fixed point of
 *   G(x) = b4 F2(sqrt(b) x) - b3 F1(x).
 */

#include <cmath>
#include <numbers>

#include "stefan_kit/model.hpp"
#include "stefan_kit/roots.hpp"
#include "stefan_kit/solution.hpp"
#include "stefan_kit/special.hpp"

namespace stefan_kit {

inline double G(double x, const DimensionlessGroups& g) {
  if (!(x > 0.0)) throw DomainError("G: x must be > 0");
  return g.b4 * special::F2(std::sqrt(g.b) * x) - g.b3 * special::F1(x);
}

namespace detail {

/// Bracket for g(x) = H(x) - x with g(0+) > 0. Shrinks the lower end while
/// g(lo) <= 0, doubles the upper end while g(hi) >= 0 (capped at 100).
template <class Fn>
Bracket expand_bracket(Fn&& g, double lo, double hi) {
  while (!(g(lo) > 0.0)) {
    lo *= 1e-3;
    if (lo < 1e-300) throw SolverError("bracket search: no positive value near 0");
  }
  while (!(g(hi) < 0.0)) {
    hi *= 2.0;
    if (hi > 100.0) throw SolverError("bracket search: upper end exceeded x = 100");
  }
  return {lo, hi};
}

/// Neumann field for face temperature T_0 and coefficient c (shared with the flux problem).
inline PointTemperature neumann_field(const ProblemSpec& spec, double T_0, double c, double x, double t) {
  detail::require_point(x, t);
  const auto& m = spec.material;
  const double a_s = m.alpha_s();
  const double a_l = m.alpha_l();
  const double s = 2.0 * c * std::sqrt(a_l * t);
  const Phase phase = classify_point(x, s);
  if (phase == Phase::Interface) return {m.T_f, phase};
  if (phase == Phase::Solid) {
    const double eta = x / (2.0 * std::sqrt(a_s * t));
    const double front = special::erf(c * std::sqrt(a_l / a_s));
    return {T_0 + (m.T_f - T_0) * special::erf(eta) / front, phase};
  }
  // erfc(eta) / erfc(c) rewritten with erfcx so both factors stay representable.
  const double eta = x / (2.0 * std::sqrt(a_l * t));
  const double ratio = special::erfcx(eta) / special::erfcx(c) * std::exp((c - eta) * (c + eta));
  return {spec.T_i - (spec.T_i - m.T_f) * ratio, phase};
}

}  // namespace detail

/// Unique xi > 0 with G(xi) = xi.
inline RootResult solve_xi(const DimensionlessGroups& groups, const RootOptions& opts = {}) {
  if (!(groups.b4 > 0.0)) throw InputError("no phase change under Dirichlet data (b4 <= 0)");
  auto g = [&](double x) { return G(x, groups) - x; };
  const Bracket start = detail::expand_bracket(g, 1e-8, 1.0);
  return find_decreasing_root(g, start, opts);
}

inline SimilaritySolution solve_p1(const ProblemSpec& spec, const RootOptions& opts = {}) {
  SimilaritySolution sol;
  sol.spec = spec;
  sol.groups = groups_p1(spec);
  const RootResult r = solve_xi(sol.groups, opts);
  sol.regime = Regime::TwoPhase;
  sol.front_coeff = r.root;
  sol.front_diffusivity = spec.material.alpha_l();
  sol.residual = r.residual;
  sol.bracket = r.bracket;
  return sol;
}

inline PointTemperature temperature_p1(const SimilaritySolution& sol, double x, double t) {
  const double T_0 = sol.spec.get<Dirichlet>().T_0;
  return detail::neumann_field(sol.spec, T_0, sol.coeff(), x, t);
}

/// q_0 = sqrt(t) k_s T_x(0, t) = k_s (T_f - T_0) / (sqrt(pi alpha_s) erf(xi sqrt(b))).
inline double face_flux_coefficient_p1(const SimilaritySolution& sol) {
  const auto& m = sol.spec.material;
  const double T_0 = sol.spec.get<Dirichlet>().T_0;
  return m.k_s * (m.T_f - T_0) /
         (std::sqrt(std::numbers::pi * m.alpha_s()) * special::erf(sol.coeff() * std::sqrt(sol.groups.b)));
}

}  // namespace stefan_kit

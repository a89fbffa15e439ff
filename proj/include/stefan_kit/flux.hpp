#pragma once

/**
 * @file flux.hpp
 * @brief Solidification driven by an extracted face flux k_s T_x(0, t) = q_0 / sqrt(t).
 *
 * With bq = q_0 / (rho l sqrt(alpha_l)) the front coefficient mu solves
 *   bq exp(-b x^2) - b3 F1(x) = x,
 * which has a positive root iff bq > b3, i.e. q_0 > k_l (T_i - T_f) / sqrt(pi alpha_l).
 * The solution coincides with the Dirichlet one for
 *   T_0 = T_f - q_0 sqrt(pi alpha_s) erf(mu sqrt(b)) / k_s.
 */

#include <cmath>
#include <numbers>

#include "stefan_kit/model.hpp"
#include "stefan_kit/neumann.hpp"
#include "stefan_kit/roots.hpp"
#include "stefan_kit/solution.hpp"
#include "stefan_kit/special.hpp"

namespace stefan_kit {

inline double critical_q0(const ProblemSpec& spec) {
  spec.validate();
  const auto& m = spec.material;
  return m.k_l * (spec.T_i - m.T_f) / std::sqrt(std::numbers::pi * m.alpha_l());
}

inline SimilaritySolution solve_flux(const ProblemSpec& spec, const RootOptions& opts = {}) {
  const double q_0 = spec.get<Flux>().q_0;
  spec.validate();
  const auto& m = spec.material;
  SimilaritySolution sol;
  sol.spec = spec;
  sol.groups = detail::common_groups(spec);
  sol.front_diffusivity = m.alpha_l();
  sol.regime = q_0 > critical_q0(spec) ? Regime::TwoPhase : Regime::PureConduction;
  const double bq = q_0 / (m.rho * m.latent_heat * std::sqrt(m.alpha_l()));
  if (sol.regime == Regime::TwoPhase && !(bq > sol.groups.b3)) sol.regime = Regime::PureConduction;
  if (sol.regime == Regime::PureConduction) return sol;

  const DimensionlessGroups& g = sol.groups;
  auto fn = [&](double x) { return bq * std::exp(-g.b * x * x) - g.b3 * special::F1(x) - x; };
  double hi = 1.0;
  while (!(fn(hi) < 0.0)) {
    hi *= 2.0;
    if (hi > 100.0) throw SolverError("solve_flux: upper bracket exceeded x = 100");
  }
  const RootResult r = find_decreasing_root(fn, {0.0, hi}, opts);
  sol.front_coeff = r.root;
  sol.residual = r.residual;
  sol.bracket = r.bracket;
  return sol;
}

/// Face temperature of the two-phase flux solution (the equivalent Dirichlet datum).
inline double face_temperature_flux(const SimilaritySolution& sol) {
  const auto& m = sol.spec.material;
  const double q_0 = sol.spec.get<Flux>().q_0;
  return m.T_f -
         q_0 * std::sqrt(std::numbers::pi * m.alpha_s()) * special::erf(sol.coeff() * std::sqrt(sol.groups.b)) / m.k_s;
}

inline PointTemperature temperature_flux(const SimilaritySolution& sol, double x, double t) {
  if (sol.regime == Regime::TwoPhase) {
    return detail::neumann_field(sol.spec, face_temperature_flux(sol), sol.coeff(), x, t);
  }
  detail::require_point(x, t);
  const auto& m = sol.spec.material;
  const double q_0 = sol.spec.get<Flux>().q_0;
  const double eta = x / (2.0 * std::sqrt(m.alpha_l() * t));
  const double drop = q_0 * std::sqrt(std::numbers::pi * m.alpha_l()) / m.k_l;
  return {sol.spec.T_i - drop * special::erfc(eta), Phase::Liquid};
}

}  // namespace stefan_kit

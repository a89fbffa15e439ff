#pragma once

#include <optional>
#include <type_traits>
#include <variant>

#include "stefan_kit/convective.hpp"
#include "stefan_kit/flux.hpp"
#include "stefan_kit/neumann.hpp"

namespace stefan_kit {

/// Solves whichever problem the spec's boundary condition describes.
inline SimilaritySolution solve(const ProblemSpec& spec, const RootOptions& opts = {}) {
  spec.validate();
  if (spec.has<Dirichlet>()) return solve_p1(spec, opts);
  if (spec.has<Convective>()) return solve_p2(spec, opts);
  return solve_flux(spec, opts);
}

inline PointTemperature temperature(const SimilaritySolution& sol, double x, double t) {
  if (sol.spec.has<Dirichlet>()) return temperature_p1(sol, x, t);
  if (sol.spec.has<Flux>()) return temperature_flux(sol, x, t);
  if (sol.regime == Regime::TwoPhase) return temperature_p2(sol, x, t);
  return {pure_conduction_temperature(sol.spec, x, t), Phase::Liquid};
}

/// T(0, t) of the solution (time-independent for every similarity solution here).
inline double face_temperature(const SimilaritySolution& sol) {
  if (sol.spec.has<Dirichlet>()) return sol.spec.get<Dirichlet>().T_0;
  if (sol.regime == Regime::PureConduction) return temperature(sol, 0.0, 1.0).value;
  if (sol.spec.has<Convective>()) return face_temperature_p2(sol);
  return face_temperature_flux(sol);
}

/// q_0 = sqrt(t) k T_x(0, t), the face flux coefficient (t-independent).
inline double face_flux_coefficient(const SimilaritySolution& sol) {
  const auto& m = sol.spec.material;
  if (sol.spec.has<Flux>()) return sol.spec.get<Flux>().q_0;
  if (sol.regime == Regime::PureConduction) {
    const auto& c = sol.spec.get<Convective>();
    return c.h_0 * (face_temperature(sol) - c.T_inf);
  }
  const double e = special::erf(sol.coeff() * std::sqrt(sol.groups.b));
  return m.k_s * (m.T_f - face_temperature(sol)) / (std::sqrt(std::numbers::pi * m.alpha_s()) * e);
}

}  // namespace stefan_kit

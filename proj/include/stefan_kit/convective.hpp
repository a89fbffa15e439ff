#pragma once

/**
 * @file convective.hpp
 * @brief Solidification driven by a convective face condition
 *        k_s T_x(0, t) = (h_0 / sqrt(t)) (T(0, t) - T_inf).
 *
 * A front exists only when h_0 exceeds critical_h0(spec). Otherwise the
 * liquid merely cools by conduction and never reaches T_f.
 */

#include <cmath>
#include <numbers>

#include "stefan_kit/model.hpp"
#include "stefan_kit/neumann.hpp"
#include "stefan_kit/roots.hpp"
#include "stefan_kit/solution.hpp"
#include "stefan_kit/special.hpp"

namespace stefan_kit {

/// F(x) = b1 exp(-b x^2) / (1 + b2 erf(sqrt(b) x)) - b3 F1(x), x >= 0.
inline double F(double x, const DimensionlessGroups& g) {
  if (!std::isfinite(x) || x < 0.0) throw DomainError("F: x must be finite and >= 0");
  const double sb = std::sqrt(g.b);
  return g.b1 * std::exp(-g.b * x * x) / (1.0 + g.b2 * special::erf(sb * x)) - g.b3 * special::F1(x);
}

/// Strict threshold: h_0 == critical_h0 is pure conduction.
inline Regime classify_regime(const ProblemSpec& spec) {
  const double h_crit = critical_h0(spec);
  return spec.get<Convective>().h_0 > h_crit ? Regime::TwoPhase : Regime::PureConduction;
}

/// Unique lambda > 0 with F(lambda) = lambda. Requires b1 > b3.
inline RootResult solve_lambda(const DimensionlessGroups& groups, const RootOptions& opts = {}) {
  if (!(groups.b1 > groups.b3)) {
    throw RegimeError("b1 <= b3: no solidification front; use pure_conduction_temperature");
  }
  auto g = [&](double x) { return F(x, groups) - x; };
  double hi = 1.0;
  while (!(g(hi) < 0.0)) {
    hi *= 2.0;
    if (hi > 100.0) throw SolverError("solve_lambda: upper bracket exceeded x = 100");
  }
  return find_decreasing_root(g, {0.0, hi}, opts);
}

inline SimilaritySolution solve_p2(const ProblemSpec& spec, const RootOptions& opts = {}) {
  SimilaritySolution sol;
  sol.spec = spec;
  sol.groups = groups_p2(spec);
  sol.front_diffusivity = spec.material.alpha_l();
  sol.regime = classify_regime(spec);
  // Rounding can leave b1 <= b3 for h_0 a few ulps above the threshold.
  if (sol.regime == Regime::TwoPhase && !(sol.groups.b1 > sol.groups.b3)) {
    sol.regime = Regime::PureConduction;
  }
  if (sol.regime == Regime::PureConduction) return sol;

  const RootResult r = solve_lambda(sol.groups, opts);
  sol.front_coeff = r.root;
  sol.residual = r.residual;
  sol.bracket = r.bracket;
  return sol;
}

/// Face temperature T_s(0, t) = T_inf + (T_f - T_inf) / (1 + b2 erf(lambda sqrt(b))), constant in t.
inline double face_temperature_p2(const SimilaritySolution& sol) {
  const auto& c = sol.spec.get<Convective>();
  const double T_f = sol.spec.material.T_f;
  const double e = sol.groups.b2 * special::erf(sol.coeff() * std::sqrt(sol.groups.b));
  return c.T_inf + (T_f - c.T_inf) / (1.0 + e);
}

inline PointTemperature temperature_p2(const SimilaritySolution& sol, double x, double t) {
  if (sol.regime != Regime::TwoPhase) {
    throw RegimeError("pure-conduction regime: use pure_conduction_temperature");
  }
  detail::require_point(x, t);
  const auto& m = sol.spec.material;
  const auto& c = sol.spec.get<Convective>();
  const double lambda = sol.coeff();
  const double s = front_position(sol, t);
  const Phase phase = detail::classify_point(x, s);
  if (phase == Phase::Interface) return {m.T_f, phase};
  if (phase == Phase::Liquid) {
    const double eta = x / (2.0 * std::sqrt(m.alpha_l() * t));
    const double ratio =
        special::erfcx(eta) / special::erfcx(lambda) * std::exp((lambda - eta) * (lambda + eta));
    return {sol.spec.T_i - (sol.spec.T_i - m.T_f) * ratio, phase};
  }
  const double b2 = sol.groups.b2;
  const double e_front = special::erf(lambda * std::sqrt(sol.groups.b));
  const double e_x = special::erf(x / (2.0 * std::sqrt(m.alpha_s() * t)));
  const double denom = 1.0 + b2 * e_front;
  if (b2 * e_front > 1.0) {
    return {m.T_f - (m.T_f - c.T_inf) * b2 * (e_front - e_x) / denom, phase};
  }
  return {c.T_inf + (m.T_f - c.T_inf) * (1.0 + b2 * e_x) / denom, phase};
}

/// Liquid-only field when 0 < h_0 <= critical_h0:
///   T = T_i - (T_i - T_inf) / (1 + K) erfc(x / (2 sqrt(alpha_l t))),  K = k_l / (h_0 sqrt(pi alpha_l)).
inline double pure_conduction_temperature(const ProblemSpec& spec, double x, double t) {
  if (classify_regime(spec) != Regime::PureConduction) {
    throw RegimeError("two-phase regime: use solve_p2 / temperature_p2");
  }
  detail::require_point(x, t);
  const auto& m = spec.material;
  const auto& c = spec.get<Convective>();
  const double K = m.k_l / (c.h_0 * std::sqrt(std::numbers::pi * m.alpha_l()));
  const double eta = x / (2.0 * std::sqrt(m.alpha_l() * t));
  return spec.T_i - (spec.T_i - c.T_inf) / (1.0 + K) * special::erfc(eta);
}

}  // namespace stefan_kit

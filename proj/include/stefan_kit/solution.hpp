#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

#include "stefan_kit/error.hpp"
#include "stefan_kit/model.hpp"
#include "stefan_kit/roots.hpp"

namespace stefan_kit {

enum class Regime { TwoPhase, PureConduction };

enum class Phase { Solid, Interface, Liquid };

inline const char* to_string(Regime r) { return r == Regime::TwoPhase ? "two_phase" : "pure_conduction"; }

inline const char* to_string(Phase p) {
  switch (p) {
    case Phase::Solid: return "solid";
    case Phase::Interface: return "interface";
    case Phase::Liquid: return "liquid";
  }
  return "?";
}

struct PointTemperature {
  double value = 0.0;  ///< [C]
  Phase phase = Phase::Liquid;
};

/// Solved similarity solution. The front is s(t) = 2 front_coeff sqrt(front_diffusivity t).
struct SimilaritySolution {
  ProblemSpec spec;
  DimensionlessGroups groups;
  Regime regime = Regime::TwoPhase;
  std::optional<double> front_coeff;  ///< xi (Dirichlet), lambda (convective), mu (flux); absent without a front
  double front_diffusivity = 0.0;     ///< alpha_l
  double residual = 0.0;              ///< |H(root) - root| at the returned root
  std::optional<Bracket> bracket;     ///< sign-change certificate of the root solve

  double coeff() const {
    if (regime != Regime::TwoPhase || !front_coeff) {
      throw RegimeError("no front exists in the pure-conduction regime");
    }
    return *front_coeff;
  }
};

inline double front_position(const SimilaritySolution& sol, double t) {
  const double c = sol.coeff();
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("front_position: t must be finite and >= 0");
  return 2.0 * c * std::sqrt(sol.front_diffusivity * t);
}

/// Front velocity ds/dt = coeff sqrt(alpha_l / t).
inline double front_velocity(const SimilaritySolution& sol, double t) {
  const double c = sol.coeff();
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("front_velocity: t must be finite and > 0");
  return c * std::sqrt(sol.front_diffusivity / t);
}

namespace detail {

inline void require_point(double x, double t) {
  if (!std::isfinite(x) || x < 0.0) throw DomainError("temperature: x must be finite and >= 0");
  if (!std::isfinite(t) || !(t > 0.0)) throw DomainError("temperature: t must be finite and > 0");
}

/// Points within 1e-12 max(1, s) of the front are the front.
inline Phase classify_point(double x, double s) {
  if (std::abs(x - s) <= 1e-12 * std::max(1.0, s)) return Phase::Interface;
  return x < s ? Phase::Solid : Phase::Liquid;
}

}  // namespace detail

}  // namespace stefan_kit

#pragma once

/**
 * @file dimensionless.hpp
 * @brief Dimensionless form of the convective problem and a back-mapping check.
 *
 *   eta = x / L,  tau = alpha_s t / L^2,  r = s / L,  theta = (T - T_f) / (T_i - T_f)
 *
 * The dimensionless path rebuilds the front equation from (Ste, B, theta_inf,
 * k_l/k_s, alpha_l/alpha_s) only, so agreement with the dimensional path checks
 * the group algebra as well as the scaling.
 */

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stefan_kit/convective.hpp"
#include "stefan_kit/model.hpp"
#include "stefan_kit/special.hpp"

namespace stefan_kit::verify {

struct DimensionlessProblem {
  double L = 0.0;
  double Ste = 0.0;
  double B = 0.0;  ///< Biot coefficient; the Biot number is B / sqrt(tau)
  double theta_inf = 0.0;
  double k_ratio = 0.0;      ///< k_l / k_s
  double alpha_ratio = 0.0;  ///< alpha_l / alpha_s
  bool front_forms = false;  ///< B > (k_l/k_s) sqrt(alpha_s / (pi alpha_l)) / theta_inf

  // Scales used for the coordinate maps.
  double alpha_s = 0.0;
  double T_f = 0.0;
  double T_i = 0.0;

  double eta(double x) const { return x / L; }
  double tau(double t) const { return alpha_s * t / (L * L); }
  double x(double eta) const { return eta * L; }
  double t(double tau) const { return tau * L * L / alpha_s; }
  double theta(double T) const { return (T - T_f) / (T_i - T_f); }
  double temperature(double theta) const { return T_f + (T_i - T_f) * theta; }

  double biot_threshold() const {
    return k_ratio / std::sqrt(std::numbers::pi * alpha_ratio) / theta_inf;
  }
};

inline DimensionlessProblem to_dimensionless(const ProblemSpec& spec, double L) {
  if (!std::isfinite(L) || !(L > 0.0)) throw InputError("characteristic length L must be > 0");
  const auto g = groups_p2(spec);
  const auto& m = spec.material;
  if (!(spec.T_i > m.T_f)) throw InputError("dimensionless form needs T_i > T_f");
  DimensionlessProblem p;
  p.L = L;
  p.Ste = g.Ste;
  p.B = g.B;
  p.theta_inf = g.theta_inf;
  p.k_ratio = m.k_l / m.k_s;
  p.alpha_ratio = m.alpha_l() / m.alpha_s();
  p.alpha_s = m.alpha_s();
  p.T_f = m.T_f;
  p.T_i = spec.T_i;
  p.front_forms = p.B > p.biot_threshold();
  return p;
}

/// Front-equation groups rebuilt from the dimensionless numbers alone.
inline DimensionlessGroups groups_from_dimensionless(const DimensionlessProblem& p) {
  DimensionlessGroups g;
  g.b = p.alpha_ratio;
  g.b1 = p.B * p.Ste * p.theta_inf / std::sqrt(p.alpha_ratio);
  g.b2 = p.B * std::sqrt(std::numbers::pi);
  g.b3 = p.Ste * p.k_ratio / (p.alpha_ratio * std::sqrt(std::numbers::pi));
  g.Ste = p.Ste;
  g.B = p.B;
  g.theta_inf = p.theta_inf;
  return g;
}

struct DimensionlessSolution {
  DimensionlessProblem problem;
  DimensionlessGroups groups;
  double lambda = 0.0;

  double r(double tau) const { return 2.0 * lambda * std::sqrt(groups.b * tau); }

  /// theta_s for eta < r(tau), theta_l beyond; 0 at the front.
  double theta(double eta, double tau) const {
    const double front = r(tau);
    if (std::abs(eta - front) <= 1e-12 * std::max(1.0, front)) return 0.0;
    if (eta < front) {
      const double e_front = special::erf(lambda * std::sqrt(groups.b));
      const double e = special::erf(eta / (2.0 * std::sqrt(tau)));
      return -problem.theta_inf * groups.b2 * (e_front - e) / (1.0 + groups.b2 * e_front);
    }
    const double z = eta / (2.0 * std::sqrt(groups.b * tau));
    return 1.0 - special::erfcx(z) / special::erfcx(lambda) * std::exp((lambda - z) * (lambda + z));
  }
};

inline DimensionlessSolution solve_dimensionless(const DimensionlessProblem& p, const RootOptions& opts = {}) {
  DimensionlessSolution sol;
  sol.problem = p;
  sol.groups = groups_from_dimensionless(p);
  if (!p.front_forms || !(sol.groups.b1 > sol.groups.b3)) {
    throw RegimeError("dimensionless problem is below the solidification threshold");
  }
  sol.lambda = solve_lambda(sol.groups, opts).root;
  return sol;
}

struct DimensionlessRoundtrip {
  double lambda_dimensional = 0.0;
  double lambda_dimensionless = 0.0;
  double field_gap = 0.0;  ///< max |T_back - T| / (T_i - T_inf)
  double front_gap = 0.0;  ///< max |r(tau) - s(t)/L| / (s(t)/L)
};

/// Solves dimensionally and in dimensionless variables, maps back and compares.
inline DimensionlessRoundtrip dimensionless_roundtrip(const ProblemSpec& spec, double L,
                                                      const RootOptions& opts = {}) {
  const SimilaritySolution dim = solve_p2(spec, opts);
  if (dim.regime != Regime::TwoPhase) throw RegimeError("dimensionless round trip needs a two-phase solution");
  const DimensionlessProblem p = to_dimensionless(spec, L);
  const DimensionlessSolution nd = solve_dimensionless(p, opts);

  DimensionlessRoundtrip out;
  out.lambda_dimensional = dim.coeff();
  out.lambda_dimensionless = nd.lambda;
  const double scale = spec.T_i - spec.get<Convective>().T_inf;
  const double a_l = spec.material.alpha_l();
  for (double t : {10.0, 100.0, 1000.0, 10000.0}) {
    const double s = front_position(dim, t);
    const double tau = p.tau(t);
    out.front_gap = std::max(out.front_gap, std::abs(nd.r(tau) - s / L) / (s / L));
    const double x_max = 2.0 * s + 8.0 * std::sqrt(a_l * t);
    constexpr int nx = 40;
    for (int j = 0; j < nx; ++j) {
      const double x = x_max * j / (nx - 1);
      const double T = temperature_p2(dim, x, t).value;
      const double T_back = p.temperature(nd.theta(p.eta(x), tau));
      out.field_gap = std::max(out.field_gap, std::abs(T_back - T) / scale);
    }
  }
  return out;
}

}  // namespace stefan_kit::verify

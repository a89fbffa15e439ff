#pragma once

/**
 * @file equivalence.hpp
 * @brief Maps between the Dirichlet and convective problems, the bounds on the
 *        Dirichlet front coefficient, and lambda(h_0) sweeps.
 *
 * For T_inf < T_0 < T_f < T_i, the Dirichlet problem with face temperature T_0
 * and the convective problem with data (h_0, T_inf) have the same solution when
 *
 *   T_0 = (T_f + T_inf e) / (1 + e),   e = b2 erf(lambda sqrt(b))
 *   h_0 = k_s (T_f - T_0) / (sqrt(pi alpha_s) (T_0 - T_inf) erf(xi sqrt(b)))
 *
 * Under these relations the two front equations share their fixed point:
 * b4 F2(sqrt(b) x) and b1 exp(-b x^2) / (1 + b2 erf(sqrt(b) x)) agree at x = xi = lambda
 * (and only there), so G(xi) = F(xi) = xi.
 */

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "stefan_kit/convective.hpp"
#include "stefan_kit/neumann.hpp"

namespace stefan_kit {

enum class MapDirection { DirichletToConvective, ConvectiveToDirichlet };

inline const char* to_string(MapDirection d) {
  return d == MapDirection::DirichletToConvective ? "dirichlet_to_convective" : "convective_to_dirichlet";
}

struct XiBounds {
  std::optional<double> bound_44;     ///< needs T_inf < T_0
  double bound_46 = 0.0;              ///< T_inf -> -inf infimum of bound_44
  std::optional<bool> physical_44;    ///< bound_44 < 1; otherwise the bound is vacuous
};

struct EquivalenceReport {
  MapDirection direction = MapDirection::DirichletToConvective;
  double T_0 = 0.0;
  double h_0 = 0.0;
  double T_inf = 0.0;
  double xi = 0.0;
  double lambda = 0.0;
  double mapped_T0 = 0.0;
  double mapped_h0 = 0.0;
  double bound_44 = 0.0;
  double bound_46 = 0.0;
  bool physical_44 = false;
  double erf_front = 0.0;      ///< erf(xi sqrt(b)), the quantity the bounds constrain
  double roundtrip_gap = 0.0;  ///< |lambda - xi|
  double field_gap = 0.0;      ///< max |T_P1 - T_P2| / (T_i - T_inf) over the sample grid
  double function_gap = 0.0;   ///< max |G(x) - F(x)| over (0, 4 max(xi, 1/4)]
  double root_identity_gap = 0.0;  ///< |b4 F2(sqrt(b) xi) - b1 exp(-b xi^2) / (1 + b2 erf(sqrt(b) xi))|
};

/// Face temperature of the equivalent Dirichlet problem.
inline double t0_from_convective(const ProblemSpec& spec, double lambda) {
  if (classify_regime(spec) != Regime::TwoPhase) {
    throw RegimeError("pure-conduction regime: no equivalent Dirichlet problem");
  }
  const auto g = groups_p2(spec);
  const auto& c = spec.get<Convective>();
  const double e = g.b2 * special::erf(lambda * std::sqrt(g.b));
  return (spec.material.T_f + c.T_inf * e) / (1.0 + e);
}

/// Convective coefficient of the equivalent convective problem with bulk temperature T_inf.
inline double h0_from_dirichlet(const ProblemSpec& spec, double T_inf, double xi) {
  const auto g = groups_p1(spec);
  const double T_0 = spec.get<Dirichlet>().T_0;
  if (!std::isfinite(T_inf) || !(T_inf < T_0)) throw InputError("invalid bulk temperature: T_inf must be < T_0");
  const auto& m = spec.material;
  const double h_0 = m.k_s / std::sqrt(std::numbers::pi * m.alpha_s()) * (m.T_f - T_0) / (T_0 - T_inf) /
                     special::erf(xi * std::sqrt(g.b));
  ProblemSpec mapped = spec;
  mapped.bc = Convective{h_0, T_inf};
  if (!(h_0 > critical_h0(mapped))) {
    throw SolverError("mapped h_0 does not exceed the solidification threshold");
  }
  return h_0;
}

inline XiBounds xi_bounds(const ProblemSpec& spec, std::optional<double> T_inf = std::nullopt) {
  spec.validate();
  const auto& m = spec.material;
  const double T_0 = spec.get<Dirichlet>().T_0;
  XiBounds out;
  const double base = m.k_s / m.k_l * std::sqrt(m.alpha_l() / m.alpha_s()) * (m.T_f - T_0);
  out.bound_46 = spec.T_i > m.T_f ? base / (spec.T_i - m.T_f) : std::numeric_limits<double>::infinity();
  if (T_inf) {
    if (!std::isfinite(*T_inf) || !(*T_inf < T_0)) throw InputError("bound_44 needs T_inf < T_0");
    out.bound_44 = out.bound_46 * (spec.T_i - *T_inf) / (T_0 - *T_inf);
    out.physical_44 = *out.bound_44 < 1.0;
  }
  return out;
}

/// Dirichlet coefficient for face temperature T_inf, the h_0 -> inf limit of lambda(h_0).
inline double lambda_limit(const ProblemSpec& spec_p2, const RootOptions& opts = {}) {
  ProblemSpec p1 = spec_p2;
  p1.bc = Dirichlet{spec_p2.get<Convective>().T_inf};
  return solve_xi(groups_p1(p1), opts).root;
}

namespace detail {

struct SampleGaps {
  double field = 0.0;
  double function = 0.0;
  double root_identity = 0.0;
};

inline SampleGaps compare_solutions(const SimilaritySolution& p1, const SimilaritySolution& p2) {
  SampleGaps gaps;
  const auto& m = p1.spec.material;
  const double scale = p2.spec.T_i - p2.spec.get<Convective>().T_inf;
  constexpr int nx = 50;
  for (double t : {1.0, 10.0, 100.0, 1000.0, 10000.0}) {
    const double x_max = 2.0 * front_position(p1, t) + 8.0 * std::sqrt(m.alpha_l() * t);
    for (int j = 0; j < nx; ++j) {
      const double x = x_max * j / (nx - 1);
      const double a = temperature_p1(p1, x, t).value;
      const double b = temperature_p2(p2, x, t).value;
      gaps.field = std::max(gaps.field, std::abs(a - b) / scale);
    }
  }
  const double x_top = 4.0 * std::max(p1.coeff(), 0.25);
  for (int j = 1; j <= 200; ++j) {
    const double x = x_top * j / 200.0;
    gaps.function = std::max(gaps.function, std::abs(G(x, p1.groups) - F(x, p2.groups)));
  }
  const double xi = p1.coeff();
  const double sb = std::sqrt(p1.groups.b);
  const double dirichlet_term = p1.groups.b4 * special::F2(sb * xi);
  const double convective_term =
      p2.groups.b1 * std::exp(-p2.groups.b * xi * xi) / (1.0 + p2.groups.b2 * special::erf(sb * xi));
  gaps.root_identity = std::abs(dirichlet_term - convective_term);
  return gaps;
}

inline void fill_bounds(EquivalenceReport& rep, const SimilaritySolution& p1) {
  const auto bounds = xi_bounds(p1.spec, rep.T_inf);
  rep.bound_44 = *bounds.bound_44;
  rep.bound_46 = bounds.bound_46;
  rep.physical_44 = *bounds.physical_44;
  rep.erf_front = special::erf(p1.coeff() * std::sqrt(p1.groups.b));
}

}  // namespace detail

/// Dirichlet problem plus T_inf -> equivalent convective problem -> solve back.
inline EquivalenceReport roundtrip_check(const ProblemSpec& spec_p1, double T_inf, const RootOptions& opts = {}) {
  EquivalenceReport rep;
  rep.direction = MapDirection::DirichletToConvective;
  rep.T_0 = spec_p1.get<Dirichlet>().T_0;
  rep.T_inf = T_inf;
  const SimilaritySolution p1 = solve_p1(spec_p1, opts);
  rep.xi = p1.coeff();
  rep.mapped_h0 = h0_from_dirichlet(spec_p1, T_inf, rep.xi);
  rep.h_0 = rep.mapped_h0;

  ProblemSpec spec_p2 = spec_p1;
  spec_p2.bc = Convective{rep.mapped_h0, T_inf};
  const SimilaritySolution p2 = solve_p2(spec_p2, opts);
  if (p2.regime != Regime::TwoPhase) throw SolverError("mapped convective problem has no front");
  rep.lambda = p2.coeff();
  rep.mapped_T0 = t0_from_convective(spec_p2, rep.lambda);
  rep.roundtrip_gap = std::abs(rep.lambda - rep.xi);
  const auto gaps = detail::compare_solutions(p1, p2);
  rep.field_gap = gaps.field;
  rep.function_gap = gaps.function;
  rep.root_identity_gap = gaps.root_identity;
  detail::fill_bounds(rep, p1);
  return rep;
}

/// Convective problem -> equivalent Dirichlet problem -> solve back.
inline EquivalenceReport roundtrip_check(const ProblemSpec& spec_p2, const RootOptions& opts = {}) {
  EquivalenceReport rep;
  rep.direction = MapDirection::ConvectiveToDirichlet;
  const auto& c = spec_p2.get<Convective>();
  rep.h_0 = c.h_0;
  rep.T_inf = c.T_inf;
  const SimilaritySolution p2 = solve_p2(spec_p2, opts);
  if (p2.regime != Regime::TwoPhase) {
    throw RegimeError("pure-conduction regime: no equivalent Dirichlet problem");
  }
  rep.lambda = p2.coeff();
  rep.mapped_T0 = t0_from_convective(spec_p2, rep.lambda);
  rep.T_0 = rep.mapped_T0;

  ProblemSpec spec_p1 = spec_p2;
  spec_p1.bc = Dirichlet{rep.mapped_T0};
  const SimilaritySolution p1 = solve_p1(spec_p1, opts);
  rep.xi = p1.coeff();
  rep.mapped_h0 = h0_from_dirichlet(spec_p1, c.T_inf, rep.xi);
  rep.roundtrip_gap = std::abs(rep.lambda - rep.xi);
  const auto gaps = detail::compare_solutions(p1, p2);
  rep.field_gap = gaps.field;
  rep.function_gap = gaps.function;
  rep.root_identity_gap = gaps.root_identity;
  detail::fill_bounds(rep, p1);
  return rep;
}

struct SweepEntry {
  double h_0 = 0.0;
  Regime regime = Regime::PureConduction;
  std::optional<double> lambda;
  std::optional<double> T0_equiv;
};

/// lambda(h_0) over a grid, in grid order. Entries at or below the threshold
/// are reported as pure conduction instead of failing the sweep.
inline std::vector<SweepEntry> lambda_sweep(const ProblemSpec& templ, const std::vector<double>& h0_grid,
                                            const RootOptions& opts = {}) {
  std::vector<SweepEntry> out;
  out.reserve(h0_grid.size());
  for (double h_0 : h0_grid) {
    ProblemSpec spec = templ;
    spec.bc = Convective{h_0, templ.get<Convective>().T_inf};
    SweepEntry e;
    e.h_0 = h_0;
    const SimilaritySolution sol = solve_p2(spec, opts);
    e.regime = sol.regime;
    if (sol.regime == Regime::TwoPhase) {
      e.lambda = sol.coeff();
      e.T0_equiv = face_temperature_p2(sol);
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace stefan_kit

#pragma once

/**
 * @file residuals.hpp
 * @brief Finite-difference residuals of the analytic fields: heat equation in
 *        each phase, Stefan condition at the front, Robin condition at x = 0.
 *
 * Every residual is made dimensionless so the numbers are comparable across
 * materials and times.
 */

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "stefan_kit/solve.hpp"

namespace stefan_kit::verify {

/// t (T_t - alpha T_xx) / scale at (x, t), central differences with steps dx and dt.
template <class Field>
double heat_residual_at(Field&& T, double alpha, double x, double t, double dx, double dt, double scale) {
  const double T_t = (T(x, t + dt) - T(x, t - dt)) / (2.0 * dt);
  const double T_xx = (T(x + dx, t) - 2.0 * T(x, t) + T(x - dx, t)) / (dx * dx);
  return t * (T_t - alpha * T_xx) / scale;
}

/// Time step paired with a space step: equal relative resolution of the diffusion length.
inline double paired_time_step(double alpha, double t, double dx) { return t * dx / std::sqrt(alpha * t); }

struct ResidualGrid {
  double dx = 0.0;  ///< coarse x-step [m]; a second pass runs at dx / 2
  std::vector<double> times;
};

struct ResidualReport {
  double heat_residual_solid = 0.0;   ///< max at the fine step
  double heat_residual_liquid = 0.0;
  double heat_order_solid = 0.0;      ///< log2(coarse / fine)
  double heat_order_liquid = 0.0;
  double dx_coarse = 0.0;
  double dx_fine = 0.0;
  int skipped_stencils = 0;           ///< straddled the front or left x >= 0

  double stefan_residual = 0.0;       ///< max relative residual at the fine step
  double stefan_order = 0.0;          ///< min over times
  std::vector<double> stefan_h_coarse;

  std::optional<double> robin_residual;  ///< convective problems only
  std::optional<double> robin_order;
};

namespace detail {

struct HeatPass {
  double solid = 0.0;
  double liquid = 0.0;
  int skipped = 0;
};

inline double temperature_scale(const ProblemSpec& spec, double face) {
  return std::max(spec.T_i - face, spec.T_i - spec.material.T_f);
}

inline HeatPass heat_pass(const SimilaritySolution& sol, const std::vector<double>& times, double dx) {
  const auto& m = sol.spec.material;
  const double scale = temperature_scale(sol.spec, face_temperature(sol));
  auto field = [&](double x, double t) { return temperature(sol, x, t).value; };
  HeatPass out;
  for (double t : times) {
    const double s = front_position(sol, t);
    std::vector<std::pair<double, Phase>> points;
    for (int k = 1; k <= 9; ++k) points.emplace_back(0.1 * k * s, Phase::Solid);
    for (double d : {0.2, 0.5, 1.0, 1.5, 2.0, 3.0}) points.emplace_back(s + d * std::sqrt(m.alpha_l() * t), Phase::Liquid);
    for (const auto& [x, phase] : points) {
      const double alpha = phase == Phase::Solid ? m.alpha_s() : m.alpha_l();
      const double dt = paired_time_step(alpha, t, dx);
      const bool inside = x - dx >= 0.0 && dt < t;
      auto same = [&](double xs, double ts) { return temperature(sol, xs, ts).phase == phase; };
      if (!inside || !same(x - dx, t) || !same(x + dx, t) || !same(x, t - dt) || !same(x, t + dt)) {
        ++out.skipped;
        continue;
      }
      const double r = std::abs(heat_residual_at(field, alpha, x, t, dx, dt, scale));
      double& worst = phase == Phase::Solid ? out.solid : out.liquid;
      worst = std::max(worst, r);
    }
  }
  return out;
}

inline double order(double coarse, double fine) { return std::log2(coarse / fine); }

}  // namespace detail

/// Heat-equation residuals in both phases at grid.dx and grid.dx / 2.
inline ResidualReport pde_residual(const SimilaritySolution& sol, const ResidualGrid& grid) {
  if (!std::isfinite(grid.dx) || !(grid.dx > 0.0) || grid.times.empty()) {
    throw InputError("pde_residual: degenerate grid");
  }
  for (double t : grid.times) {
    if (!(t > 0.0)) throw InputError("pde_residual: sample times must be > 0");
  }
  (void)sol.coeff();
  const auto coarse = detail::heat_pass(sol, grid.times, grid.dx);
  const auto fine = detail::heat_pass(sol, grid.times, 0.5 * grid.dx);
  if (!(coarse.solid > 0.0) || !(coarse.liquid > 0.0)) {
    throw InputError("pde_residual: grid leaves a phase without usable stencils");
  }
  ResidualReport rep;
  rep.dx_coarse = grid.dx;
  rep.dx_fine = 0.5 * grid.dx;
  rep.heat_residual_solid = fine.solid;
  rep.heat_residual_liquid = fine.liquid;
  rep.heat_order_solid = detail::order(coarse.solid, fine.solid);
  rep.heat_order_liquid = detail::order(coarse.liquid, fine.liquid);
  rep.skipped_stencils = coarse.skipped + fine.skipped;
  return rep;
}

/// Relative residual of k_s T_x(s-) - k_l T_x(s+) = rho l ds/dt with one-sided
/// first-order gradients of step h.
inline double stefan_residual(const SimilaritySolution& sol, double t, double h) {
  const double s = front_position(sol, t);
  if (!(h > 0.0) || s < 10.0 * h) throw InputError("stefan_residual: front too close to the face for step h");
  const auto& m = sol.spec.material;
  const double grad_s = (m.T_f - temperature(sol, s - h, t).value) / h;
  const double grad_l = (temperature(sol, s + h, t).value - m.T_f) / h;
  const double latent = m.rho * m.latent_heat * front_velocity(sol, t);
  return std::abs(m.k_s * grad_s - m.k_l * grad_l - latent) / latent;
}

/// Relative residual of k T_x(0, t) = (h_0 / sqrt(t)) (T(0, t) - T_inf), with the
/// second-order one-sided gradient (-3 T(0) + 4 T(h) - T(2h)) / (2h).
/// Uses k_s for a two-phase solution and k_l in the pure-conduction regime.
inline double robin_residual(const SimilaritySolution& sol, double t, double h) {
  const auto& c = sol.spec.get<Convective>();
  const auto& m = sol.spec.material;
  if (!(h > 0.0) || !(t > 0.0)) throw InputError("robin_residual: h and t must be > 0");
  auto T = [&](double x) { return temperature(sol, x, t).value; };
  const double grad = (-3.0 * T(0.0) + 4.0 * T(h) - T(2.0 * h)) / (2.0 * h);
  const double k = sol.regime == Regime::TwoPhase ? m.k_s : m.k_l;
  const double rhs = c.h_0 / std::sqrt(t) * (T(0.0) - c.T_inf);
  return std::abs(k * grad - rhs) / std::abs(rhs);
}

/// Stefan residuals at h = s(t) / 50 and s(t) / 100; Robin residuals at
/// h = 2 sqrt(alpha t) x {5e-4, 5e-5} (convective problems). Fills the
/// corresponding fields of `rep`.
inline void boundary_residuals(const SimilaritySolution& sol, const std::vector<double>& times, ResidualReport& rep) {
  rep.stefan_residual = 0.0;
  rep.stefan_order = std::numeric_limits<double>::infinity();
  rep.stefan_h_coarse.clear();
  for (double t : times) {
    const double h = front_position(sol, t) / 50.0;
    const double coarse = stefan_residual(sol, t, h);
    const double fine = stefan_residual(sol, t, 0.5 * h);
    rep.stefan_h_coarse.push_back(h);
    rep.stefan_residual = std::max(rep.stefan_residual, fine);
    rep.stefan_order = std::min(rep.stefan_order, detail::order(coarse, fine));
  }
  if (sol.spec.has<Convective>()) {
    double worst = 0.0;
    double worst_order = std::numeric_limits<double>::infinity();
    const auto& m = sol.spec.material;
    const double alpha = sol.regime == Regime::TwoPhase ? m.alpha_s() : m.alpha_l();
    for (double t : times) {
      const double ell = 2.0 * std::sqrt(alpha * t);
      const double coarse = robin_residual(sol, t, 5e-4 * ell);
      const double fine = robin_residual(sol, t, 5e-5 * ell);
      worst = std::max(worst, fine);
      worst_order = std::min(worst_order, detail::order(coarse, fine));
    }
    rep.robin_residual = worst;
    rep.robin_order = worst_order;
  }
}

}  // namespace stefan_kit::verify

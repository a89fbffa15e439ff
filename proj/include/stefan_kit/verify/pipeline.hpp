#pragma once

/**
 * @file pipeline.hpp
 * @brief Runs every verification check on one spec and grades it against fixed thresholds.
 */

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "stefan_kit/solve.hpp"
#include "stefan_kit/verify/dimensionless.hpp"
#include "stefan_kit/verify/enthalpy.hpp"
#include "stefan_kit/verify/residuals.hpp"

namespace stefan_kit::verify {

struct Thresholds {
  double heat_order = 1.85;
  double stefan_order = 0.9;
  double robin_residual = 1e-8;
  double front_error = 0.02;
  double dimensionless_gap = 1e-10;
};

struct VerifyConfig {
  std::vector<double> times{1800.0, 3600.0, 7200.0};
  double t0 = 100.0;
  double t1 = 400.0;
  int cells = 2000;
  double L = 0.1;
  Thresholds thresholds;
};

struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool at_least = false;  ///< pass iff value >= threshold (otherwise value <= threshold)
  bool pass = false;
};

struct VerificationReport {
  ResidualReport residuals;
  FrontPath front;
  std::optional<DimensionlessRoundtrip> dimensionless;
  std::vector<Check> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

namespace detail {

inline Check grade(std::string name, double value, double threshold, bool at_least) {
  Check c{std::move(name), value, threshold, at_least, false};
  c.pass = std::isfinite(value) && (at_least ? value >= threshold : value <= threshold);
  return c;
}

}  // namespace detail

inline VerificationReport run_verification(const ProblemSpec& spec, const VerifyConfig& cfg,
                                           const RootOptions& opts = {}) {
  const SimilaritySolution sol = solve(spec, opts);
  if (sol.regime != Regime::TwoPhase) throw RegimeError("verification needs a two-phase problem");
  if (cfg.times.empty()) throw InputError("verification needs at least one sample time");

  VerificationReport rep;
  double dx = std::numeric_limits<double>::infinity();
  for (double t : cfg.times) dx = std::min(dx, front_position(sol, t) / 40.0);
  rep.residuals = pde_residual(sol, {dx, cfg.times});
  boundary_residuals(sol, cfg.times, rep.residuals);
  rep.front = enthalpy_march(spec, cfg.t0, cfg.t1, cfg.cells, {}, opts);
  if (spec.has<Convective>()) rep.dimensionless = dimensionless_roundtrip(spec, cfg.L, opts);

  const auto& th = cfg.thresholds;
  const auto& r = rep.residuals;
  rep.checks.push_back(detail::grade("heat_order_solid", r.heat_order_solid, th.heat_order, true));
  rep.checks.push_back(detail::grade("heat_order_liquid", r.heat_order_liquid, th.heat_order, true));
  rep.checks.push_back(detail::grade("stefan_order", r.stefan_order, th.stefan_order, true));
  if (r.robin_residual) {
    rep.checks.push_back(detail::grade("robin_residual", *r.robin_residual, th.robin_residual, false));
  }
  rep.checks.push_back(detail::grade("enthalpy_front_error", rep.front.max_rel_error, th.front_error, false));
  if (rep.dimensionless) {
    const double gap = std::max(rep.dimensionless->field_gap, rep.dimensionless->front_gap);
    rep.checks.push_back(detail::grade("dimensionless_gap", gap, th.dimensionless_gap, false));
  }
  return rep;
}

}  // namespace stefan_kit::verify

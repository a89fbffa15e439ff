#pragma once

/**
 * @file enthalpy.hpp
 * @brief Explicit fixed-grid enthalpy method used as an independent check of
 *        front propagation.
 *
 * The state is seeded from the analytic similarity field at t0 (the exact
 * solution has an infinite face flux at t = 0) and then marched to t1 without
 * consulting the analytic solution again. The front is read off the latent
 * fraction: s = dx * sum_i (1 - f_i).
 */

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "stefan_kit/solve.hpp"

namespace stefan_kit::verify {

struct EnthalpyOptions {
  double safety = 0.4;          ///< dt = safety dx^2 / max(alpha_s, alpha_l)
  std::optional<double> dt;     ///< explicit override; refused above the diffusion limit
  int samples = 41;             ///< front samples, uniform in [2 t0, t1]
};

struct FrontSample {
  double t = 0.0;
  double s_numeric = 0.0;
  double s_exact = 0.0;
};

struct FrontPath {
  std::vector<FrontSample> samples;
  double max_rel_error = 0.0;  ///< max |s_numeric - s_exact| / s_exact over the samples
  int cells = 0;
  double dx = 0.0;
  double dt = 0.0;
  double x_max = 0.0;
  long steps = 0;
};

namespace detail {

class EnthalpyGrid {
 public:
  EnthalpyGrid(const MaterialProperties& m, double T_i, int cells, double dx)
      : m_(m), T_i_(T_i), dx_(dx), H_(cells), T_(cells), k_(cells), flux_(cells + 1) {
    latent_ = m.rho * m.latent_heat;
  }

  std::vector<double>& enthalpy() { return H_; }

  double temperature_of(double H) const {
    if (H < 0.0) return m_.T_f + H / (m_.rho * m_.c_s);
    if (H > latent_) return m_.T_f + (H - latent_) / (m_.rho * m_.c_l);
    return m_.T_f;
  }

  double enthalpy_of(double T, double liquid_fraction) const {
    if (T < m_.T_f) return m_.rho * m_.c_s * (T - m_.T_f);
    if (T > m_.T_f) return latent_ + m_.rho * m_.c_l * (T - m_.T_f);
    return liquid_fraction * latent_;
  }

  double front() const {
    double solid = 0.0;
    for (double H : H_) solid += 1.0 - std::clamp(H / latent_, 0.0, 1.0);
    return solid * dx_;
  }

  /// One explicit step; `face_flux(T0, k0)` returns the heat flux entering at x = 0.
  template <class FaceFlux>
  void step(double dt, FaceFlux&& face_flux) {
    const std::size_t n = H_.size();
    for (std::size_t i = 0; i < n; ++i) {
      T_[i] = temperature_of(H_[i]);
      const double f = std::clamp(H_[i] / latent_, 0.0, 1.0);
      k_[i] = m_.k_s + f * (m_.k_l - m_.k_s);
    }
    // flux_[i] is the flux in +x through the left face of cell i.
    flux_[0] = face_flux(T_[0], k_[0]);
    for (std::size_t i = 1; i < n; ++i) {
      const double k_face = 2.0 * k_[i - 1] * k_[i] / (k_[i - 1] + k_[i]);
      flux_[i] = -k_face * (T_[i] - T_[i - 1]) / dx_;
    }
    flux_[n] = -k_[n - 1] * (T_i_ - T_[n - 1]) / (0.5 * dx_);
    const double c = dt / dx_;
    for (std::size_t i = 0; i < n; ++i) H_[i] += c * (flux_[i] - flux_[i + 1]);
  }

 private:
  MaterialProperties m_;
  double T_i_;
  double dx_;
  double latent_ = 0.0;
  std::vector<double> H_;
  std::vector<double> T_;
  std::vector<double> k_;
  std::vector<double> flux_;
};

}  // namespace detail

/// Marches the two-phase problem of `spec` from t0 to t1 on `cells` cells over
/// [0, x_max], x_max = max(6 s(t1), 10 sqrt(alpha_l t1)), with T_i held beyond x_max.
inline FrontPath enthalpy_march(const ProblemSpec& spec, double t0, double t1, int cells,
                                const EnthalpyOptions& opts = {}, const RootOptions& root_opts = {}) {
  if (!(t0 > 0.0) || !(t1 > 2.0 * t0)) throw InputError("enthalpy_march: need 0 < t0 and t1 > 2 t0");
  if (cells < 2) throw InputError("enthalpy_march: need at least 2 cells");
  if (opts.samples < 2) throw InputError("enthalpy_march: need at least 2 samples");
  const SimilaritySolution sol = solve(spec, root_opts);
  if (sol.regime != Regime::TwoPhase) throw RegimeError("enthalpy_march needs a two-phase problem");

  const auto& m = spec.material;
  FrontPath path;
  path.cells = cells;
  path.x_max = std::max(6.0 * front_position(sol, t1), 10.0 * std::sqrt(m.alpha_l() * t1));
  path.dx = path.x_max / cells;
  const double alpha_max = std::max(m.alpha_s(), m.alpha_l());
  const double dt_limit = 0.5 * path.dx * path.dx / alpha_max;
  path.dt = opts.dt.value_or(opts.safety * path.dx * path.dx / alpha_max);
  if (!(path.dt > 0.0) || path.dt > dt_limit) {
    throw InputError("enthalpy_march: time step above the explicit diffusion limit dx^2 / (2 alpha)");
  }

  detail::EnthalpyGrid grid(m, spec.T_i, cells, path.dx);
  const double s0 = front_position(sol, t0);
  auto& H = grid.enthalpy();
  for (int i = 0; i < cells; ++i) {
    const double left = i * path.dx;
    const double right = left + path.dx;
    if (right <= s0) {
      H[i] = grid.enthalpy_of(std::min(temperature(sol, left + 0.5 * path.dx, t0).value, m.T_f), 0.0);
    } else if (left >= s0) {
      H[i] = grid.enthalpy_of(std::max(temperature(sol, left + 0.5 * path.dx, t0).value, m.T_f), 1.0);
    } else {
      H[i] = grid.enthalpy_of(m.T_f, (right - s0) / path.dx);
    }
  }

  auto face_flux = [&](double t) {
    return [&, t](double T0, double k0) -> double {
      const double half = 0.5 * path.dx;
      if (spec.has<Dirichlet>()) return -k0 * (T0 - spec.get<Dirichlet>().T_0) / half;
      if (spec.has<Flux>()) return -spec.get<Flux>().q_0 / std::sqrt(t);
      const auto& c = spec.get<Convective>();
      const double h = c.h_0 / std::sqrt(t);
      return -(T0 - c.T_inf) / (1.0 / h + half / k0);
    };
  };

  double t = t0;
  const double t_first = 2.0 * t0;
  for (int j = 0; j < opts.samples; ++j) {
    const double target = t_first + (t1 - t_first) * j / (opts.samples - 1);
    while (t < target) {
      const double dt = std::min(path.dt, target - t);
      grid.step(dt, face_flux(t + 0.5 * dt));
      t = (target - t <= path.dt) ? target : t + dt;
      ++path.steps;
    }
    FrontSample fs{target, grid.front(), front_position(sol, target)};
    path.max_rel_error = std::max(path.max_rel_error, std::abs(fs.s_numeric - fs.s_exact) / fs.s_exact);
    path.samples.push_back(fs);
  }
  return path;
}

}  // namespace stefan_kit::verify

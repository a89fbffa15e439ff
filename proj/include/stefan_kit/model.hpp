#pragma once

/**
 * @file model.hpp
 * @brief Dimensional problem data and the dimensionless groups derived from it.
 *
 * Temperatures are in degrees Celsius and only ever enter through differences.
 * Units of the boundary coefficients follow the heat balance they appear in:
 * h(t) = h_0 / sqrt(t) has units W m^-2 K^-1, so h_0 is W m^-2 K^-1 s^1/2;
 * q(t) = q_0 / sqrt(t) is W m^-2, so q_0 is W m^-2 s^1/2.
 */

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <type_traits>
#include <variant>

#include "stefan_kit/error.hpp"

namespace stefan_kit {

struct MaterialProperties {
  double rho = 0.0;          ///< density [kg m^-3]
  double c_s = 0.0;          ///< solid specific heat [J kg^-1 K^-1]
  double c_l = 0.0;          ///< liquid specific heat [J kg^-1 K^-1]
  double k_s = 0.0;          ///< solid conductivity [W m^-1 K^-1]
  double k_l = 0.0;          ///< liquid conductivity [W m^-1 K^-1]
  double latent_heat = 0.0;  ///< [J kg^-1]
  double T_f = 0.0;          ///< phase-change temperature [C]

  double alpha_s() const { return k_s / (rho * c_s); }
  double alpha_l() const { return k_l / (rho * c_l); }

  void validate() const {
    auto positive = [](double v, const char* name) {
      if (!std::isfinite(v) || !(v > 0.0)) {
        throw InputError(std::string("material property '") + name + "' must be finite and > 0");
      }
    };
    positive(rho, "rho");
    positive(c_s, "c_s");
    positive(c_l, "c_l");
    positive(k_s, "k_s");
    positive(k_l, "k_l");
    positive(latent_heat, "latent_heat");
    if (!std::isfinite(T_f)) throw InputError("material property 'T_f' must be finite");
  }
};

/// Prescribed face temperature T(0, t) = T_0.
struct Dirichlet {
  double T_0 = 0.0;
};

/// k_s T_x(0, t) = (h_0 / sqrt(t)) (T(0, t) - T_inf).
struct Convective {
  double h_0 = 0.0;
  double T_inf = 0.0;
};

/// k_s T_x(0, t) = q_0 / sqrt(t), heat extracted through the face.
struct Flux {
  double q_0 = 0.0;
};

using BoundaryCondition = std::variant<Dirichlet, Convective, Flux>;

struct ProblemSpec {
  MaterialProperties material;
  double T_i = 0.0;  ///< initial liquid temperature [C]
  BoundaryCondition bc;

  template <class Bc>
  bool has() const {
    return std::holds_alternative<Bc>(bc);
  }

  template <class Bc>
  const Bc& get() const {
    const Bc* p = std::get_if<Bc>(&bc);
    if (p == nullptr) throw InputError("problem spec carries a different boundary condition");
    return *p;
  }

  /// T_i == T_f is accepted as the one-phase limit.
  void validate() const {
    material.validate();
    if (!std::isfinite(T_i)) throw InputError("T_i must be finite");
    if (T_i < material.T_f) throw InputError("T_i must be >= T_f (material starts liquid)");
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Dirichlet>) {
            if (!std::isfinite(v.T_0)) throw InputError("T_0 must be finite");
            if (v.T_0 >= material.T_f) {
              throw InputError("no instantaneous phase change: T_0 must be < T_f");
            }
          } else if constexpr (std::is_same_v<T, Convective>) {
            if (!std::isfinite(v.h_0) || !(v.h_0 > 0.0)) throw InputError("h_0 must be finite and > 0");
            if (!std::isfinite(v.T_inf)) throw InputError("T_inf must be finite");
            if (v.T_inf >= material.T_f) {
              throw InputError("invalid cooling configuration: T_inf must be < T_f");
            }
          } else {
            if (!std::isfinite(v.q_0) || !(v.q_0 > 0.0)) throw InputError("q_0 must be finite and > 0");
          }
        },
        bc);
  }
};

/// Groups not defined for a given boundary condition are left at 0.
struct DimensionlessGroups {
  double b = 0.0;          ///< alpha_l / alpha_s
  double b1 = 0.0;         ///< h_0 (T_f - T_inf) / (rho l sqrt(alpha_l))
  double b2 = 0.0;         ///< (h_0 / k_s) sqrt(pi alpha_s)
  double b3 = 0.0;         ///< c_l (T_i - T_f) / (l sqrt(pi))
  double b4 = 0.0;         ///< k_s (T_f - T_0) / (rho l sqrt(pi alpha_s alpha_l))
  double Ste = 0.0;        ///< c_s (T_i - T_f) / l
  double B = 0.0;          ///< h_0 sqrt(alpha_s) / k_s
  double theta_inf = 0.0;  ///< (T_f - T_inf) / (T_i - T_f); +inf in the one-phase limit
};

namespace detail {

inline DimensionlessGroups common_groups(const ProblemSpec& spec) {
  const auto& m = spec.material;
  DimensionlessGroups g;
  g.b = m.alpha_l() / m.alpha_s();
  g.b3 = m.c_l * (spec.T_i - m.T_f) / (m.latent_heat * std::sqrt(std::numbers::pi));
  g.Ste = m.c_s * (spec.T_i - m.T_f) / m.latent_heat;
  return g;
}

}  // namespace detail

inline DimensionlessGroups groups_p1(const ProblemSpec& spec) {
  if (!spec.has<Dirichlet>()) throw InputError("groups_p1 requires a Dirichlet boundary condition");
  spec.validate();
  const auto& m = spec.material;
  auto g = detail::common_groups(spec);
  const double T_0 = spec.get<Dirichlet>().T_0;
  g.b4 = m.k_s * (m.T_f - T_0) /
         (m.rho * m.latent_heat * std::sqrt(std::numbers::pi * m.alpha_s() * m.alpha_l()));
  return g;
}

inline DimensionlessGroups groups_p2(const ProblemSpec& spec) {
  if (!spec.has<Convective>()) throw InputError("groups_p2 requires a convective boundary condition");
  spec.validate();
  const auto& m = spec.material;
  const auto& c = spec.get<Convective>();
  auto g = detail::common_groups(spec);
  g.b1 = c.h_0 * (m.T_f - c.T_inf) / (m.rho * m.latent_heat * std::sqrt(m.alpha_l()));
  g.b2 = c.h_0 / m.k_s * std::sqrt(std::numbers::pi * m.alpha_s());
  g.B = c.h_0 * std::sqrt(m.alpha_s()) / m.k_s;
  g.theta_inf = spec.T_i > m.T_f ? (m.T_f - c.T_inf) / (spec.T_i - m.T_f)
                                 : std::numeric_limits<double>::infinity();
  return g;
}

/// Threshold h_0* = (k_l / sqrt(pi alpha_l)) (T_i - T_f) / (T_f - T_inf); 0 in the one-phase limit.
inline double critical_h0(const ProblemSpec& spec) {
  if (!spec.has<Convective>()) throw InputError("critical_h0 requires a convective boundary condition");
  spec.validate();
  const auto& m = spec.material;
  const auto& c = spec.get<Convective>();
  return m.k_l / std::sqrt(std::numbers::pi * m.alpha_l()) * (spec.T_i - m.T_f) / (m.T_f - c.T_inf);
}

}  // namespace stefan_kit

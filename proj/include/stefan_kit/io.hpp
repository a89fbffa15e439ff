#pragma once

/**
 * @file io.hpp
 * @brief Spec ingestion (flat JSON) and JSON/CSV serialization of results.
 *
 * Spec document keys: rho, c_s, c_l, k_s, k_l, latent_heat, T_f, T_i and
 * exactly one boundary set: {T_0} | {h_0, T_inf} | {q_0}. Unknown keys are
 * rejected. Numbers are written in shortest round-trip form, independent of
 * the C locale.
 */

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "stefan_kit/equivalence.hpp"
#include "stefan_kit/solve.hpp"
#include "stefan_kit/verify/pipeline.hpp"

namespace stefan_kit::io {

using nlohmann::json;

inline ProblemSpec parse_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed spec JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("spec JSON must be an object");

  static const std::set<std::string> known{"rho", "c_s", "c_l", "k_s", "k_l", "latent_heat", "T_f",
                                           "T_i", "T_0", "h_0", "T_inf", "q_0"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) throw InputError("unknown key in spec: '" + key + "'");
    if (!value.is_number()) throw InputError("spec key '" + key + "' must be a number");
  }
  auto need = [&](const char* key) -> double {
    if (!doc.contains(key)) throw InputError(std::string("spec is missing key '") + key + "'");
    return doc.at(key).get<double>();
  };

  ProblemSpec spec;
  spec.material.rho = need("rho");
  spec.material.c_s = need("c_s");
  spec.material.c_l = need("c_l");
  spec.material.k_s = need("k_s");
  spec.material.k_l = need("k_l");
  spec.material.latent_heat = need("latent_heat");
  spec.material.T_f = need("T_f");
  spec.T_i = need("T_i");

  const bool dirichlet = doc.contains("T_0");
  const bool convective = doc.contains("h_0") || doc.contains("T_inf");
  const bool flux = doc.contains("q_0");
  if (int(dirichlet) + int(convective) + int(flux) != 1) {
    throw InputError("spec needs exactly one boundary set: {T_0} | {h_0, T_inf} | {q_0}");
  }
  if (dirichlet) spec.bc = Dirichlet{need("T_0")};
  if (convective) spec.bc = Convective{need("h_0"), need("T_inf")};
  if (flux) spec.bc = Flux{need("q_0")};
  spec.validate();
  return spec;
}

inline ProblemSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_spec(text);
}

/// Shortest round-trip decimal form.
inline std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline const char* problem_name(const ProblemSpec& spec) {
  if (spec.has<Dirichlet>()) return "dirichlet";
  if (spec.has<Convective>()) return "convective";
  return "flux";
}

inline const char* coeff_name(const ProblemSpec& spec) {
  if (spec.has<Dirichlet>()) return "xi";
  if (spec.has<Convective>()) return "lambda";
  return "mu";
}

inline json to_json(const DimensionlessGroups& g) {
  return {{"b", g.b},     {"b1", g.b1}, {"b2", g.b2}, {"b3", g.b3},
          {"b4", g.b4},   {"Ste", g.Ste}, {"B", g.B}, {"theta_inf", g.theta_inf}};
}

/// Solution summary. `T_inf` adds bound_44 for a Dirichlet spec.
inline json solution_summary(const SimilaritySolution& sol, std::optional<double> T_inf = std::nullopt) {
  json j;
  j["problem"] = problem_name(sol.spec);
  j["regime"] = to_string(sol.regime);
  j["groups"] = to_json(sol.groups);
  j["alpha_s"] = sol.spec.material.alpha_s();
  j["alpha_l"] = sol.spec.material.alpha_l();
  if (sol.spec.has<Convective>()) j["critical_h0"] = critical_h0(sol.spec);
  if (sol.spec.has<Flux>()) j["critical_q0"] = critical_q0(sol.spec);
  j["face_temperature"] = face_temperature(sol);
  j["q0"] = face_flux_coefficient(sol);
  if (sol.regime != Regime::TwoPhase) return j;

  j[coeff_name(sol.spec)] = sol.coeff();
  j["front_diffusivity"] = sol.front_diffusivity;
  j["residual"] = sol.residual;
  if (sol.bracket) j["bracket"] = {sol.bracket->lo, sol.bracket->hi};

  // Bounds on erf(xi sqrt(b)) for the Dirichlet problem with this face temperature.
  ProblemSpec p1 = sol.spec;
  p1.bc = Dirichlet{face_temperature(sol)};
  if (sol.spec.has<Convective>()) T_inf = sol.spec.get<Convective>().T_inf;
  const auto bounds = xi_bounds(p1, T_inf);
  json jb;
  jb["erf_front"] = special::erf(sol.coeff() * std::sqrt(sol.groups.b));
  jb["bound_46"] = bounds.bound_46;
  if (bounds.bound_44) {
    jb["T_inf"] = *T_inf;
    jb["bound_44"] = *bounds.bound_44;
    jb["physical_44"] = *bounds.physical_44;
  }
  j["bounds"] = jb;
  return j;
}

inline json to_json(const EquivalenceReport& r) {
  return {{"direction", to_string(r.direction)},
          {"T_0", r.T_0},
          {"h_0", r.h_0},
          {"T_inf", r.T_inf},
          {"xi", r.xi},
          {"lambda", r.lambda},
          {"mapped_T0", r.mapped_T0},
          {"mapped_h0", r.mapped_h0},
          {"erf_front", r.erf_front},
          {"bound_44", r.bound_44},
          {"bound_46", r.bound_46},
          {"physical_44", r.physical_44},
          {"roundtrip_gap", r.roundtrip_gap},
          {"field_gap", r.field_gap},
          {"function_gap", r.function_gap},
          {"root_identity_gap", r.root_identity_gap}};
}

inline json to_json(const verify::VerificationReport& rep) {
  json j;
  const auto& r = rep.residuals;
  j["residuals"] = {{"heat_residual_solid", r.heat_residual_solid},
                    {"heat_residual_liquid", r.heat_residual_liquid},
                    {"heat_order_solid", r.heat_order_solid},
                    {"heat_order_liquid", r.heat_order_liquid},
                    {"dx_coarse", r.dx_coarse},
                    {"dx_fine", r.dx_fine},
                    {"skipped_stencils", r.skipped_stencils},
                    {"stefan_residual", r.stefan_residual},
                    {"stefan_order", r.stefan_order},
                    {"stefan_h_coarse", r.stefan_h_coarse}};
  if (r.robin_residual) {
    j["residuals"]["robin_residual"] = *r.robin_residual;
    j["residuals"]["robin_order"] = *r.robin_order;
  }
  json front = json::array();
  for (const auto& s : rep.front.samples) front.push_back({{"t", s.t}, {"s_numeric", s.s_numeric}, {"s_exact", s.s_exact}});
  j["enthalpy"] = {{"cells", rep.front.cells}, {"dx", rep.front.dx},       {"dt", rep.front.dt},
                   {"x_max", rep.front.x_max}, {"steps", rep.front.steps}, {"max_rel_error", rep.front.max_rel_error},
                   {"front", front}};
  if (rep.dimensionless) {
    j["dimensionless"] = {{"lambda_dimensional", rep.dimensionless->lambda_dimensional},
                          {"lambda_dimensionless", rep.dimensionless->lambda_dimensionless},
                          {"field_gap", rep.dimensionless->field_gap},
                          {"front_gap", rep.dimensionless->front_gap}};
  }
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold},
                      {"comparison", c.at_least ? ">=" : "<="}, {"pass", c.pass}});
  }
  j["checks"] = checks;
  j["pass"] = rep.all_pass();
  return j;
}

/// Profile CSV `t,x,temperature,phase`; x spans [0, s(t) + 8 sqrt(alpha_l t)] in x_samples points.
inline std::string profile_csv(const SimilaritySolution& sol, const std::vector<double>& times, int x_samples) {
  if (x_samples < 2) throw InputError("x_samples must be >= 2");
  std::ostringstream out;
  out << "t,x,temperature,phase\n";
  const double a_l = sol.spec.material.alpha_l();
  for (double t : times) {
    const double s = sol.regime == Regime::TwoPhase ? front_position(sol, t) : 0.0;
    const double x_max = s + 8.0 * std::sqrt(a_l * t);
    for (int j = 0; j < x_samples; ++j) {
      const double x = x_max * j / (x_samples - 1);
      const auto p = temperature(sol, x, t);
      out << format_number(t) << ',' << format_number(x) << ',' << format_number(p.value) << ','
          << to_string(p.phase) << '\n';
    }
  }
  return out.str();
}

/// Sweep CSV `h0,lambda,T0_equiv`; sub-threshold rows leave lambda and T0_equiv empty.
inline std::string sweep_csv(const std::vector<SweepEntry>& rows) {
  std::ostringstream out;
  out << "h0,lambda,T0_equiv\n";
  for (const auto& r : rows) {
    out << format_number(r.h_0) << ',' << (r.lambda ? format_number(*r.lambda) : "") << ','
        << (r.T0_equiv ? format_number(*r.T0_equiv) : "") << '\n';
  }
  return out.str();
}

}  // namespace stefan_kit::io

#pragma once

// Command-line front end. Exit codes: 0 ok, 1 verification failure,
// 2 input error, 3 regime mismatch.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stefan_kit/io.hpp"
#include "stefan_kit/stefan_kit.hpp"

namespace stefan_kit::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kRegimeMismatch = 3 };

enum class Command { Solve, Equivalence, Sweep, Verify };

struct RunConfig {
  Command command = Command::Solve;
  std::string spec_path;
  std::string output_path;
  std::vector<double> times{3600.0};
  int x_samples = 50;
  std::optional<double> T_inf;
  std::string h0_grid;
  int cells = 2000;
  std::optional<double> tol;
  bool require_two_phase = false;
};

/// Grid "lo:hi:n", log-spaced. An endpoint suffixed with 'c' is a multiple of critical_h0.
inline std::vector<double> parse_h0_grid(const std::string& text, double h_crit) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (parts.size() != 3) throw InputError("--h0-grid must look like lo:hi:n");
  auto endpoint = [&](std::string s) {
    double scale = 1.0;
    if (!s.empty() && s.back() == 'c') {
      scale = h_crit;
      s.pop_back();
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw InputError("--h0-grid: bad number '" + s + "'");
    }
    if (used != s.size()) throw InputError("--h0-grid: bad number '" + s + "'");
    return v * scale;
  };
  const double lo = endpoint(parts[0]);
  const double hi = endpoint(parts[1]);
  int n = 0;
  try {
    n = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw InputError("--h0-grid: bad count '" + parts[2] + "'");
  }
  if (!(lo > 0.0) || !(hi >= lo) || n < 2) throw InputError("--h0-grid needs 0 < lo <= hi and n >= 2");
  std::vector<double> grid(n);
  const double log_lo = std::log(lo);
  const double log_hi = std::log(hi);
  for (int i = 0; i < n; ++i) grid[i] = std::exp(log_lo + (log_hi - log_lo) * i / (n - 1));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

inline RootOptions root_options(const RunConfig& cfg) {
  RootOptions opts;
  if (const char* env = std::getenv("STEFAN_KIT_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) throw InputError("STEFAN_KIT_TOL must be a positive number");
    opts.residual_tol = v;
  }
  if (cfg.tol) {
    if (!(*cfg.tol > 0.0)) throw InputError("--tol must be > 0");
    opts.residual_tol = *cfg.tol;
  }
  return opts;
}

namespace detail {

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write output file '" + path + "'");
  file << text;
}

inline void check_run_config(const RunConfig& cfg) {
  if (cfg.x_samples < 2) throw InputError("--x-samples must be >= 2");
  if (cfg.cells < 2) throw InputError("--cells must be >= 2");
  if (cfg.times.empty()) throw InputError("--times needs at least one value");
  for (double t : cfg.times) {
    if (!(t > 0.0) || !std::isfinite(t)) throw InputError("--times values must be > 0");
  }
}

inline int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const ProblemSpec spec = io::load_spec(cfg.spec_path);
  const SimilaritySolution sol = solve(spec, root_options(cfg));
  if (cfg.require_two_phase && sol.regime != Regime::TwoPhase) {
    throw RegimeError("spec is in the pure-conduction regime but a two-phase solution was requested");
  }
  write_text(cfg.output_path, io::solution_summary(sol, cfg.T_inf).dump(2) + "\n", out);
  if (!cfg.output_path.empty()) {
    std::filesystem::path csv(cfg.output_path);
    csv.replace_extension(".csv");
    write_text(csv.string(), io::profile_csv(sol, cfg.times, cfg.x_samples), out);
  }
  return kOk;
}

inline int cmd_equivalence(const RunConfig& cfg, std::ostream& out) {
  const ProblemSpec spec = io::load_spec(cfg.spec_path);
  const RootOptions opts = root_options(cfg);
  EquivalenceReport rep;
  if (spec.has<Dirichlet>()) {
    if (!cfg.T_inf) throw InputError("equivalence from a Dirichlet spec needs --t-inf");
    rep = roundtrip_check(spec, *cfg.T_inf, opts);
  } else if (spec.has<Convective>()) {
    rep = roundtrip_check(spec, opts);
  } else {
    throw InputError("equivalence needs a Dirichlet or convective spec");
  }
  constexpr double kGapTol = 1e-10;
  auto j = io::to_json(rep);
  j["pass"] = rep.roundtrip_gap <= kGapTol;
  write_text(cfg.output_path, j.dump(2) + "\n", out);
  return rep.roundtrip_gap <= kGapTol ? kOk : kVerifyFailed;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const ProblemSpec spec = io::load_spec(cfg.spec_path);
  if (!spec.has<Convective>()) throw InputError("sweep needs a convective spec (h_0 is replaced by the grid)");
  if (cfg.h0_grid.empty()) throw InputError("sweep needs --h0-grid lo:hi:n");
  const auto grid = parse_h0_grid(cfg.h0_grid, critical_h0(spec));
  const auto rows = lambda_sweep(spec, grid, root_options(cfg));
  write_text(cfg.output_path, io::sweep_csv(rows), out);
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ProblemSpec spec = io::load_spec(cfg.spec_path);
  const RootOptions opts = root_options(cfg);
  if (solve(spec, opts).regime != Regime::TwoPhase) {
    throw RegimeError("verification needs a two-phase spec");
  }
  verify::VerifyConfig vc;
  vc.times = cfg.times;
  vc.cells = cfg.cells;
  const auto rep = verify::run_verification(spec, vc, opts);
  write_text(cfg.output_path, io::to_json(rep).dump(2) + "\n", out);
  for (const auto& c : rep.checks) {
    if (!c.pass) {
      err << "verification failed: " << c.name << " = " << io::format_number(c.value) << " (needs "
          << (c.at_least ? ">= " : "<= ") << io::format_number(c.threshold) << ")\n";
    }
  }
  return rep.all_pass() ? kOk : kVerifyFailed;
}

}  // namespace detail

/// Runs the CLI on `args` (excluding the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Similarity solutions of the two-phase Stefan problem with temperature, convective and flux faces",
               "stefan_kit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--spec", cfg.spec_path, "Spec JSON file")->required();
    sub->add_option("--out", cfg.output_path, "Output file (stdout when omitted)");
    sub->add_option("--tol", cfg.tol, "Root residual tolerance (overrides STEFAN_KIT_TOL)");
  };

  auto* solve_cmd = app.add_subcommand("solve", "Solve the spec; JSON summary plus a t,x,temperature,phase CSV");
  add_common(solve_cmd);
  solve_cmd->add_option("--times", cfg.times, "Profile times [s]")->delimiter(',');
  solve_cmd->add_option("--x-samples", cfg.x_samples, "Profile points per time");
  solve_cmd->add_option("--t-inf", cfg.T_inf, "Bulk temperature for bound_44 (Dirichlet specs)");
  solve_cmd->add_flag("--two-phase", cfg.require_two_phase, "Fail with exit 3 unless a front forms");

  auto* eq_cmd = app.add_subcommand("equivalence", "Map between the Dirichlet and convective problems and back");
  add_common(eq_cmd);
  eq_cmd->add_option("--t-inf", cfg.T_inf, "Bulk temperature (Dirichlet specs)");

  auto* sweep_cmd = app.add_subcommand("sweep", "lambda(h_0) over a log grid; CSV h0,lambda,T0_equiv");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--h0-grid", cfg.h0_grid, "lo:hi:n, log-spaced; suffix c = multiple of critical h_0");

  auto* verify_cmd = app.add_subcommand("verify", "Finite-difference and enthalpy-method verification");
  add_common(verify_cmd);
  verify_cmd->add_option("--times", cfg.times, "Residual sample times [s]")->delimiter(',');
  verify_cmd->add_option("--cells", cfg.cells, "Enthalpy-method cells");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (solve_cmd->parsed()) cfg.command = Command::Solve;
  if (eq_cmd->parsed()) cfg.command = Command::Equivalence;
  if (sweep_cmd->parsed()) cfg.command = Command::Sweep;
  if (verify_cmd->parsed()) cfg.command = Command::Verify;

  try {
    detail::check_run_config(cfg);
    switch (cfg.command) {
      case Command::Solve: return detail::cmd_solve(cfg, out);
      case Command::Equivalence: return detail::cmd_equivalence(cfg, out);
      case Command::Sweep: return detail::cmd_sweep(cfg, out);
      case Command::Verify: return detail::cmd_verify(cfg, out, err);
    }
  } catch (const RegimeError& e) {
    err << "regime mismatch: " << e.what() << "\n";
    return kRegimeMismatch;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace stefan_kit::cli

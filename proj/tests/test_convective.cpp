#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "stefan_kit/convective.hpp"
#include "stefan_kit/equivalence.hpp"
#include "stefan_kit/verify/residuals.hpp"

using namespace stefan_kit;

namespace {

// Bisection oracle (mpmath findroot cross-check, 40 digits).
constexpr double kLambdaAt1e4 = 0.46567025197950690192;
constexpr double kLambdaAt10Crit = 0.34716867904592811978;
constexpr double kPureAtHalfCrit = 5.4688666634639292556;  // x = 0.01 m, t = 3600 s

TEST(Convective, FAtZero) {
  const auto g = groups_p2(oracle::water_ice_convective());
  EXPECT_DOUBLE_EQ(F(0.0, g), g.b1 - g.b3);
  auto at_threshold = g;
  at_threshold.b1 = at_threshold.b3;
  EXPECT_EQ(F(0.0, at_threshold), 0.0);
  EXPECT_THROW(F(-1e-3, g), DomainError);
}

TEST(Convective, FIsDecreasing) {
  const auto g = groups_p2(oracle::water_ice_convective());
  double prev = F(0.0, g);
  for (double x = 0.01; x < 10.0; x += 0.01) {
    const double v = F(x, g);
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(Convective, RegimeClassification) {
  auto spec = oracle::water_ice_convective();
  const double h_crit = critical_h0(spec);
  spec.bc = Convective{h_crit, -20.0};
  EXPECT_EQ(classify_regime(spec), Regime::PureConduction);
  spec.bc = Convective{2.0 * h_crit, -20.0};
  EXPECT_EQ(classify_regime(spec), Regime::TwoPhase);
  auto one_phase = oracle::water_ice_convective(1e-3);
  one_phase.T_i = one_phase.material.T_f;
  EXPECT_EQ(classify_regime(one_phase), Regime::TwoPhase);
  spec.bc = Convective{0.0, -20.0};
  EXPECT_THROW(classify_regime(spec), InputError);
}

TEST(Convective, WaterIceCoefficients) {
  const auto sol = solve_p2(oracle::water_ice_convective(1e4));
  const auto& g = sol.groups;
  EXPECT_NEAR(oracle::convective_root(g.b, g.b1, g.b2, g.b3), kLambdaAt1e4, 1e-13);
  EXPECT_NEAR(sol.coeff(), kLambdaAt1e4, 1e-12);
  EXPECT_LE(std::abs(F(sol.coeff(), g) - sol.coeff()), 1e-12);

  auto spec = oracle::water_ice_convective();
  spec.bc = Convective{10.0 * critical_h0(spec), -20.0};
  EXPECT_NEAR(solve_p2(spec).coeff(), kLambdaAt10Crit, 1e-12);
}

TEST(Convective, LambdaVanishesAtThreshold) {
  auto spec = oracle::water_ice_convective();
  const double h_crit = critical_h0(spec);
  double prev = std::numeric_limits<double>::infinity();
  for (double eps : {1e-1, 1e-3, 1e-5, 1e-7, 1e-9}) {
    spec.bc = Convective{h_crit * (1.0 + eps), -20.0};
    const double lambda = solve_p2(spec).coeff();
    EXPECT_GT(lambda, 0.0);
    EXPECT_LT(lambda, prev);
    prev = lambda;
  }
  EXPECT_LT(prev, 1e-8);
  auto g = groups_p2(spec);
  g.b1 = g.b3;
  EXPECT_THROW(solve_lambda(g), RegimeError);
}

TEST(Convective, LargeH0ApproachesDirichletLimit) {
  auto spec = oracle::water_ice_convective();
  spec.bc = Convective{1e6 * critical_h0(spec), -20.0};
  EXPECT_NEAR(solve_p2(spec).coeff(), lambda_limit(spec), 1e-4);
}

TEST(Convective, FieldValues) {
  const auto sol = solve_p2(oracle::water_ice_convective());
  const double face = face_temperature_p2(sol);
  for (double t : {1.0, 100.0}) {
    EXPECT_NEAR(temperature_p2(sol, 0.0, t).value, face, 1e-12);
    const double s = front_position(sol, t);
    EXPECT_EQ(temperature_p2(sol, s, t).value, 0.0);
    EXPECT_NEAR(temperature_p2(sol, 1e3, t).value, 10.0, 1e-12);
  }
  EXPECT_GT(face, -20.0);
  EXPECT_LT(face, 0.0);
}

TEST(Convective, BothSolidFormsAgree) {
  // Evaluate the additive and subtractive forms explicitly around the switch b2 erf = 1.
  for (double h_0 : {600.0, 2e3, 1e4, 1e6}) {
    const auto sol = solve_p2(oracle::water_ice_convective(h_0));
    const auto& m = sol.spec.material;
    const double t = 500.0;
    const double b2 = sol.groups.b2;
    const double ef = std::erf(sol.coeff() * std::sqrt(sol.groups.b));
    for (double frac : {0.0, 0.3, 0.9, 0.999}) {
      const double x = frac * front_position(sol, t);
      const double e = std::erf(x / (2.0 * std::sqrt(m.alpha_s() * t)));
      const double additive = -20.0 + 20.0 * (1.0 + b2 * e) / (1.0 + b2 * ef);
      EXPECT_NEAR(temperature_p2(sol, x, t).value, additive, 1e-12 * 30.0);
    }
  }
}

TEST(Convective, BoundsOnSolidAndLiquid) {
  oracle::SpecGenerator gen(21);
  for (int n = 0; n < 10; ++n) {
    const auto spec = gen.convective(1.05, 1e3);
    const auto sol = solve_p2(spec);
    const double T_inf = spec.get<Convective>().T_inf;
    const double T_f = spec.material.T_f;
    for (int j = 0; j < 20; ++j) {
      const double t = std::pow(10.0, -1.0 + 0.3 * j);
      const double s = front_position(sol, t);
      for (int i = 0; i < 100; ++i) {
        const auto p = temperature_p2(sol, (i + 0.5) / 100.0 * 3.0 * s, t);
        if (p.phase == Phase::Solid) {
          EXPECT_GT(p.value, T_inf);
          EXPECT_LT(p.value, T_f);
        } else if (p.phase == Phase::Liquid) {
          EXPECT_GT(p.value, T_f);
          EXPECT_LE(p.value, spec.T_i);
        }
      }
    }
  }
}

TEST(Convective, RobinResidualDecaysQuadratically) {
  const auto sol = solve_p2(oracle::water_ice_convective());
  const double t = 3600.0;
  const double coarse = verify::robin_residual(sol, t, 1e-4);
  const double fine = verify::robin_residual(sol, t, 1e-5);
  EXPECT_LE(fine, 1e-8);
  EXPECT_GT(coarse / fine, 50.0);
}

TEST(Convective, PureConduction) {
  auto spec = oracle::water_ice_convective();
  const double h_crit = critical_h0(spec);
  spec.bc = Convective{h_crit, -20.0};
  for (double t : {1.0, 3600.0}) EXPECT_NEAR(pure_conduction_temperature(spec, 0.0, t), 0.0, 1e-12);

  spec.bc = Convective{0.5 * h_crit, -20.0};
  EXPECT_NEAR(pure_conduction_temperature(spec, 0.01, 3600.0), kPureAtHalfCrit, 1e-12);
  EXPECT_NEAR(pure_conduction_temperature(spec, 10.0, 3600.0), 10.0, 1e-12);

  const auto sol = solve_p2(spec);
  EXPECT_EQ(sol.regime, Regime::PureConduction);
  EXPECT_FALSE(sol.front_coeff.has_value());
  EXPECT_THROW(front_position(sol, 1.0), RegimeError);
  EXPECT_THROW(temperature_p2(sol, 0.0, 1.0), RegimeError);

  // Bounds, monotone profile, Robin residual.
  const double T_face = pure_conduction_temperature(spec, 0.0, 100.0);
  EXPECT_GE(T_face, 0.0);
  double prev = T_face;
  for (int i = 1; i < 100; ++i) {
    const double T = pure_conduction_temperature(spec, i * 1e-4, 100.0);
    EXPECT_GT(T, prev);
    EXPECT_GT(T, -20.0);
    EXPECT_LT(T, 10.0);
    prev = T;
  }
  EXPECT_LE(verify::robin_residual(sol, 3600.0, 1e-6), 1e-8);

  spec.bc = Convective{2.0 * h_crit, -20.0};
  EXPECT_THROW(pure_conduction_temperature(spec, 0.0, 1.0), RegimeError);
}

TEST(Convective, RegimeDichotomyOnRandomSpecs) {
  oracle::SpecGenerator gen(99);
  for (int i = 0; i < 200; ++i) {
    const auto spec = gen.convective(0.1, 10.0);
    const auto sol = solve_p2(spec);
    bool lambda_ok = false;
    bool pure_ok = false;
    try {
      lambda_ok = solve_lambda(groups_p2(spec)).root > 0.0;
    } catch (const RegimeError&) {
    }
    try {
      pure_ok = std::isfinite(pure_conduction_temperature(spec, 0.0, 1.0));
    } catch (const RegimeError&) {
    }
    EXPECT_NE(lambda_ok, pure_ok);
    EXPECT_EQ(sol.regime == Regime::TwoPhase, lambda_ok);
  }
}

TEST(Convective, LambdaIncreasesWithH0AndStaysBelowLimit) {
  const auto spec = oracle::water_ice_convective();
  const double h_crit = critical_h0(spec);
  const double limit = lambda_limit(spec);
  double prev = 0.0;
  for (int i = 1; i <= 50; ++i) {
    auto s = spec;
    s.bc = Convective{h_crit * std::pow(1e6, i / 50.0), -20.0};
    const double lambda = solve_p2(s).coeff();
    EXPECT_GT(lambda, prev);
    EXPECT_LT(lambda, limit);
    prev = lambda;
  }
}

}  // namespace

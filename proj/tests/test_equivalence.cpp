#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "stefan_kit/equivalence.hpp"

using namespace stefan_kit;

namespace {

constexpr double kXi = 0.59317033743379478863;
constexpr double kT0At1e4 = -12.478674586598984725;
constexpr double kT0At10Crit = -7.1500824588549970357;
constexpr double kH0FromDirichlet = 4761.9716540182901144;  // T_inf = -40
constexpr double kBound46 = 2.6457513110645906954;
constexpr double kErfFront = 0.24880411130765995357;

// erf(xi sqrt(b)) < bound_46 (T_f - T_inf) / (T_0 - T_inf), the bound implied by h_0 > h_0*.
double sharp_bound(const ProblemSpec& spec, double T_inf) {
  const auto& m = spec.material;
  const double T_0 = spec.get<Dirichlet>().T_0;
  const double a_s = m.k_s / (m.rho * m.c_s);
  const double a_l = m.k_l / (m.rho * m.c_l);
  return m.k_s / m.k_l * std::sqrt(a_l / a_s) * (m.T_f - T_0) / (spec.T_i - m.T_f) * (m.T_f - T_inf) / (T_0 - T_inf);
}

TEST(Equivalence, MapsMatchFrozenValues) {
  const auto spec = oracle::water_ice_convective(1e4);
  EXPECT_NEAR(t0_from_convective(spec, solve_p2(spec).coeff()), kT0At1e4, 1e-11);
  auto ten = oracle::water_ice_convective();
  ten.bc = Convective{10.0 * critical_h0(ten), -20.0};
  EXPECT_NEAR(t0_from_convective(ten, solve_p2(ten).coeff()), kT0At10Crit, 1e-11);

  EXPECT_NEAR(h0_from_dirichlet(oracle::water_ice_dirichlet(), -40.0, kXi), kH0FromDirichlet, 1e-8);
  EXPECT_THROW(h0_from_dirichlet(oracle::water_ice_dirichlet(), -20.0, kXi), InputError);
  EXPECT_THROW(h0_from_dirichlet(oracle::water_ice_dirichlet(), -10.0, kXi), InputError);
}

TEST(Equivalence, MapLimits) {
  auto spec = oracle::water_ice_convective();
  const double h_crit = critical_h0(spec);
  spec.bc = Convective{h_crit * (1.0 + 1e-9), -20.0};
  EXPECT_NEAR(t0_from_convective(spec, solve_p2(spec).coeff()), 0.0, 1e-6);
  spec.bc = Convective{1e9 * h_crit, -20.0};
  EXPECT_NEAR(t0_from_convective(spec, solve_p2(spec).coeff()), -20.0, 1e-4);
  spec.bc = Convective{0.5 * h_crit, -20.0};
  EXPECT_THROW(t0_from_convective(spec, 0.1), RegimeError);
}

TEST(Equivalence, RoundTripFromDirichlet) {
  const auto rep = roundtrip_check(oracle::water_ice_dirichlet(), -40.0);
  EXPECT_EQ(rep.direction, MapDirection::DirichletToConvective);
  EXPECT_NEAR(rep.xi, kXi, 1e-12);
  EXPECT_LE(rep.roundtrip_gap, 1e-10);
  EXPECT_LE(rep.field_gap, 1e-9);
  EXPECT_NEAR(rep.mapped_T0, -20.0, 1e-9);
  EXPECT_LE(rep.root_identity_gap, 1e-12);
  EXPECT_NEAR(rep.bound_46, kBound46, 1e-12);
  EXPECT_NEAR(rep.erf_front, kErfFront, 1e-12);
}

TEST(Equivalence, RoundTripFromConvective) {
  const auto rep = roundtrip_check(oracle::water_ice_convective(1e4));
  EXPECT_EQ(rep.direction, MapDirection::ConvectiveToDirichlet);
  EXPECT_NEAR(rep.T_0, kT0At1e4, 1e-11);
  EXPECT_LE(rep.roundtrip_gap, 1e-10);
  EXPECT_LE(rep.field_gap, 1e-9);
  EXPECT_NEAR(rep.mapped_h0, 1e4, 1e-6);
  EXPECT_LE(rep.root_identity_gap, 1e-12);
}

TEST(Equivalence, EquationsDifferAwayFromTheRoot) {
  // G and F share the root but are different functions.
  const auto rep = roundtrip_check(oracle::water_ice_convective(1e4));
  EXPECT_GT(rep.function_gap, 1.0);
}

TEST(Equivalence, RandomRoundTrips) {
  oracle::SpecGenerator gen(11);
  for (int i = 0; i < 40; ++i) {
    const auto spec = gen.convective(1.01, 1e4);
    const auto a = roundtrip_check(spec);
    EXPECT_LE(a.roundtrip_gap, 1e-10 * std::max(1.0, a.lambda));
    EXPECT_LE(a.field_gap, 1e-9);

    ProblemSpec p1 = spec;
    p1.bc = Dirichlet{a.T_0};
    const auto b = roundtrip_check(p1, spec.get<Convective>().T_inf);
    EXPECT_LE(b.roundtrip_gap, 1e-10 * std::max(1.0, b.xi));
    EXPECT_NEAR(b.mapped_h0, spec.get<Convective>().h_0, 1e-7 * spec.get<Convective>().h_0);
  }
}

TEST(Equivalence, BoundsHoldForRandomBulkTemperatures) {
  oracle::SpecGenerator gen(4);
  for (int i = 0; i < 50; ++i) {
    const auto spec = gen.dirichlet();
    const auto sol = solve_p1(spec);
    const double e = std::erf(sol.coeff() * std::sqrt(sol.groups.b));
    const double T_0 = spec.get<Dirichlet>().T_0;
    const auto base = xi_bounds(spec);
    EXPECT_FALSE(base.bound_44.has_value());
    EXPECT_LT(e, base.bound_46);
    for (int j = 0; j < 5; ++j) {
      const double T_inf = T_0 - gen.log_uniform(1e-3, 1e4);
      const auto bounds = xi_bounds(spec, T_inf);
      const double sharp = sharp_bound(spec, T_inf);
      EXPECT_LT(e, sharp);
      EXPECT_LE(sharp, *bounds.bound_44);
      EXPECT_LT(bounds.bound_46, *bounds.bound_44);
      EXPECT_EQ(*bounds.physical_44, *bounds.bound_44 < 1.0);
    }
  }
}

TEST(Equivalence, BoundIncreasesWithBulkTemperature) {
  const auto spec = oracle::water_ice_dirichlet();
  double prev = xi_bounds(spec).bound_46;
  for (double T_inf : {-1e9, -1e4, -1e3, -100.0, -40.0, -25.0, -20.5, -20.001}) {
    const double b44 = *xi_bounds(spec, T_inf).bound_44;
    EXPECT_GT(b44, prev);
    prev = b44;
  }
  EXPECT_NEAR(*xi_bounds(spec, -20.0 - 1e9).bound_44, kBound46, 1e-6);
  EXPECT_THROW(xi_bounds(spec, -20.0), InputError);
}

TEST(Equivalence, OnePhaseBoundIsInfinite) {
  auto spec = oracle::water_ice_dirichlet();
  spec.T_i = spec.material.T_f;
  EXPECT_TRUE(std::isinf(xi_bounds(spec).bound_46));
}

TEST(Equivalence, SweepIsMonotoneAndReachesTheLimit) {
  const auto spec = oracle::water_ice_convective();
  const double h_crit = critical_h0(spec);
  std::vector<double> grid{0.5 * h_crit, h_crit};
  for (int i = 0; i < 50; ++i) grid.push_back(h_crit * std::pow(1e6, (i + 1) / 50.0));
  grid.insert(grid.begin() + 2, 1.001 * h_crit);
  const auto rows = lambda_sweep(spec, grid);
  ASSERT_EQ(rows.size(), grid.size());
  EXPECT_EQ(rows[0].regime, Regime::PureConduction);
  EXPECT_EQ(rows[1].regime, Regime::PureConduction);
  EXPECT_FALSE(rows[1].lambda.has_value());
  ASSERT_TRUE(rows[2].lambda.has_value());
  EXPECT_LT(*rows[2].lambda, 0.05);
  double prev = 0.0;
  double prev_T0 = 0.0;
  for (std::size_t i = 2; i < rows.size(); ++i) {
    ASSERT_EQ(rows[i].regime, Regime::TwoPhase);
    EXPECT_GT(*rows[i].lambda, prev);
    EXPECT_LT(*rows[i].T0_equiv, prev_T0);
    prev = *rows[i].lambda;
    prev_T0 = *rows[i].T0_equiv;
  }
  EXPECT_NEAR(rows.back().lambda.value(), lambda_limit(spec), 1e-3);
}

}  // namespace

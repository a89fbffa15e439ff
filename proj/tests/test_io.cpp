#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "oracles.hpp"
#include "stefan_kit/io.hpp"

using namespace stefan_kit;

namespace {

const std::string kMaterial =
    R"("rho": 1000, "c_s": 2100, "c_l": 4200, "k_s": 2.1, "k_l": 0.6, "latent_heat": 334000, "T_f": 0, "T_i": 10)";

std::string fixture(const std::string& name) { return std::string(STEFAN_KIT_FIXTURES) + "/" + name; }

TEST(Io, ParsesEachBoundaryKind) {
  EXPECT_TRUE(io::parse_spec("{" + kMaterial + R"(, "T_0": -20})").has<Dirichlet>());
  const auto conv = io::parse_spec("{" + kMaterial + R"(, "h_0": 1e4, "T_inf": -20})");
  ASSERT_TRUE(conv.has<Convective>());
  EXPECT_EQ(conv.get<Convective>().h_0, 1e4);
  EXPECT_TRUE(io::parse_spec("{" + kMaterial + R"(, "q_0": 5e4})").has<Flux>());
  EXPECT_EQ(io::load_spec(fixture("water_ice_dirichlet.json")).material.k_s, 2.1);
}

TEST(Io, RejectsBadDocuments) {
  EXPECT_THROW(io::parse_spec("{" + kMaterial), InputError);
  EXPECT_THROW(io::parse_spec("[1, 2]"), InputError);
  EXPECT_THROW(io::parse_spec("{" + kMaterial + "}"), InputError);
  EXPECT_THROW(io::parse_spec("{" + kMaterial + R"(, "T_0": -20, "q_0": 1})"), InputError);
  EXPECT_THROW(io::parse_spec("{" + kMaterial + R"(, "h_0": 1e4})"), InputError);
  EXPECT_THROW(io::parse_spec("{" + kMaterial + R"(, "T_0": "cold"})"), InputError);
  EXPECT_THROW(io::load_spec(fixture("unknown_key.json")), InputError);
  EXPECT_THROW(io::load_spec(fixture("malformed.json")), InputError);
  EXPECT_THROW(io::load_spec(fixture("zero_latent_heat.json")), InputError);
  EXPECT_THROW(io::load_spec(fixture("does_not_exist.json")), InputError);
}

TEST(Io, NumbersRoundTrip) {
  for (double v : {0.1, 0.59317033743379478863, -12.478674586598984725, 1e-300, 6.02e23}) {
    EXPECT_EQ(std::stod(io::format_number(v)), v);
  }
  EXPECT_EQ(io::format_number(3600.0), "3600");
}

TEST(Io, SummaryContents) {
  const auto sol = solve(oracle::water_ice_dirichlet());
  const auto j = io::solution_summary(sol, -40.0);
  EXPECT_EQ(j["problem"], "dirichlet");
  EXPECT_EQ(j["regime"], "two_phase");
  EXPECT_EQ(j["xi"].get<double>(), sol.coeff());
  EXPECT_TRUE(j["bounds"].contains("bound_44"));

  const auto pure = solve(oracle::water_ice_convective(200.0));
  const auto jp = io::solution_summary(pure);
  EXPECT_EQ(jp["regime"], "pure_conduction");
  EXPECT_FALSE(jp.contains("lambda"));
}

TEST(Io, CsvLayoutAndDeterminism) {
  const auto sol = solve(oracle::water_ice_convective());
  const auto csv = io::profile_csv(sol, {100.0, 3600.0}, 5);
  EXPECT_EQ(csv.rfind("t,x,temperature,phase\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 11);
  EXPECT_EQ(csv, io::profile_csv(solve(oracle::water_ice_convective()), {100.0, 3600.0}, 5));
  EXPECT_THROW(io::profile_csv(sol, {1.0}, 1), InputError);

  const auto rows = lambda_sweep(oracle::water_ice_convective(), {100.0, 1e4});
  const auto sweep = io::sweep_csv(rows);
  EXPECT_EQ(sweep.substr(0, sweep.find('\n')), "h0,lambda,T0_equiv");
  EXPECT_NE(sweep.find("\n100,,\n"), std::string::npos);
}

}  // namespace

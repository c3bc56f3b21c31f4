#include <gtest/gtest.h>

#include "hetnet/config.hpp"

using namespace hetnet;

TEST(Config, DefaultsAreTableValues) {
  const auto c = default_config();
  EXPECT_EQ(c.radio.p_macro_dbm, 46.0);
  EXPECT_EQ(c.radio.lambda_pico, 13.8);
  EXPECT_EQ(c.icic.rho_db, 4.0);
  EXPECT_EQ(c.icic.rho_pico_db, 0.0);
  EXPECT_EQ(c.grids.rho_grid_db.size(), 26u);
}

TEST(Config, RoundTripIsIdentity) {
  auto c = default_config({"icic.alpha=0.1", "grids.alpha=0,0.3,0.7", "sim.fairness_cells=macro_voronoi",
                           "run.seed=42", "compare.imported=sites.csv", "radio.k_pico_db=-11.25"});
  const auto text = serialize_config(c);
  const auto back = parse_config(text);
  EXPECT_TRUE(back == c);
  EXPECT_EQ(serialize_config(back), text);
}

TEST(Config, ShortestReprRoundTripsAwkwardValues) {
  auto c = default_config({"icic.alpha=0.1"});
  c.radio.lambda_ue = 1.0 / 3.0;
  EXPECT_TRUE(parse_config(serialize_config(c)) == c);
}

TEST(Config, OverridesBeatTheFile) {
  const auto c = parse_config("[icic]\nalpha = 0.25\ntau_db = 12\n", {"icic.alpha=0.75"});
  EXPECT_EQ(c.icic.alpha, 0.75);
  EXPECT_EQ(c.icic.tau_db, 12.0);
}

TEST(Config, RangeSyntax) {
  const auto c = default_config({"grids.rho_db=-2:2:1"});
  EXPECT_EQ(c.grids.rho_grid_db, (std::vector<double>{-2, -1, 0, 1, 2}));
}

TEST(Config, Errors) {
  EXPECT_THROW(parse_config("[icic]\nfoo = 1\n"), ConfigError);
  EXPECT_THROW(parse_config("[nope]\nalpha = 1\n"), ConfigError);
  EXPECT_THROW(parse_config("[icic]\nalpha = abc\n"), ConfigError);
  EXPECT_THROW(default_config({"icic.alpha=2"}), ConfigError);  // invariant
  EXPECT_THROW(default_config({"noequals"}), ConfigError);
  EXPECT_THROW(default_config({"sim.trials=-1"}), ConfigError);
  EXPECT_THROW(default_config({"grids.alpha=0.5,0.25"}), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/hetnet.ini"), ConfigError);
}

TEST(Config, SeedReachesBackends) {
  const auto c = default_config({"run.seed=9"});
  EXPECT_EQ(c.sim_backend().rng_seed, 9u);
  EXPECT_EQ(c.grid_backend().backend().rng_seed, 9u);
}

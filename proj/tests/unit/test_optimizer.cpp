#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "hetnet/optimizer.hpp"

using namespace hetnet;

namespace {

GridSpec small_grid() {
  GridSpec g = GridSpec::defaults();
  g.sim.window = {8000.0, 4000.0};
  g.sim.guard_m = 800.0;
  g.sim.trials = 2;
  g.rho_grid_db = {0, 4, 8};
  g.rho_pico_grid_db = {-4, 0, 4};
  g.alpha_grid = {0.0, 0.5};
  g.tau_grid_db = {6.0};
  g.beta_grid = {0.3, 0.5};
  return g;
}

FairnessMetrics fm(double c_log) { return {0.0, c_log, 1}; }

}  // namespace

TEST(Optimizer, ArgmaxPicksFirstOfTies) {
  const std::vector<FairnessMetrics> v{fm(-3), fm(-1), fm(-1), fm(-2)};
  EXPECT_EQ(argmax_c_log(v), 1u);
}

TEST(Optimizer, ArgmaxTreatsNanAsWorst) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const std::vector<FairnessMetrics> v{fm(nan), fm(-5), fm(nan)};
  EXPECT_EQ(argmax_c_log(v), 1u);
  EXPECT_THROW(argmax_c_log(std::vector<FairnessMetrics>{}), std::invalid_argument);
}

TEST(Optimizer, GridSearchMatchesBruteForce) {
  const GridSpec g = small_grid();
  const auto drops = drop_networks(RadioParams{}, 0.5, g.backend());
  const auto opt = optimize_thresholds(drops, g, 0.5, 6.0, 0.5);
  double best = -std::numeric_limits<double>::infinity();
  double br = 0, brp = 0;
  for (double r : g.rho_grid_db) {
    for (double rp : g.rho_pico_grid_db) {
      IcicParams ic;
      ic.alpha = 0.5;
      ic.tau_db = 6.0;
      ic.rho_db = r;
      ic.rho_pico_db = rp;
      const auto f = fairness_on_drops(drops, ic, g.sim);
      if (f.c_log > best) {
        best = f.c_log;
        br = r;
        brp = rp;
      }
    }
  }
  EXPECT_EQ(opt.rho_star_db, br);
  EXPECT_EQ(opt.rho_pico_star_db, brp);
  EXPECT_EQ(opt.c_log, best);
}

TEST(Optimizer, SinglePointGrid) {
  GridSpec g = small_grid();
  g.rho_grid_db = {4};
  g.rho_pico_grid_db = {0};
  const auto t = sweep_alpha_tau(RadioParams{}, g);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].rho_star_db, 4.0);
  EXPECT_EQ(t[1].alpha, 0.5);
}

TEST(Optimizer, RefiningTheGridNeverLowersTheOptimum) {
  GridSpec coarse = small_grid();
  GridSpec fine = coarse;
  fine.rho_grid_db = {0, 2, 4, 6, 8};
  fine.rho_pico_grid_db = {-4, -2, 0, 2, 4};
  const auto drops = drop_networks(RadioParams{}, 0.5, coarse.backend());
  EXPECT_GE(optimize_thresholds(drops, fine, 0.5, 6.0, 0.5).c_log,
            optimize_thresholds(drops, coarse, 0.5, 6.0, 0.5).c_log);
}

TEST(Optimizer, SmoothingIsAMovingAverage) {
  OptimumThresholds t;
  for (double a : {0.0, 0.5, 1.0}) t.push_back({a, 6.0, 0.5, a * 10.0, 2.0, -1.0, 1.0});
  const auto s = smooth_along_alpha(t);
  EXPECT_DOUBLE_EQ(s[0].rho_star_db, 2.5);
  EXPECT_DOUBLE_EQ(s[1].rho_star_db, 5.0);
  EXPECT_DOUBLE_EQ(s[2].rho_star_db, 7.5);
  EXPECT_DOUBLE_EQ(s[1].rho_pico_star_db, 2.0);
  EXPECT_DOUBLE_EQ(s[1].c_log, -1.0);
}

TEST(Optimizer, BetaSweepAndFrontierShapes) {
  const GridSpec g = small_grid();
  const auto t = sweep_alpha_tau(RadioParams{}, g);
  const auto b = sweep_beta(RadioParams{}, g, t);
  EXPECT_EQ(b.size(), g.beta_grid.size() * t.size());
  const auto f = percentile_frontier(RadioParams{}, g, t);
  ASSERT_EQ(f.size(), t.size());
  for (const auto& p : f) EXPECT_LE(p.se5, p.se50);
}

TEST(Optimizer, GridValidation) {
  GridSpec g = small_grid();
  g.rho_grid_db = {4, 2};
  EXPECT_THROW(g.validate(), std::invalid_argument);
  g = small_grid();
  g.alpha_grid = {};
  EXPECT_THROW(g.validate(), std::invalid_argument);
}

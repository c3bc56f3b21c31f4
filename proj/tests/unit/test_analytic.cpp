#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hetnet/analytic.hpp"

using namespace hetnet;

namespace {

// Interference exponent of one PPP tier seen from outside a disc of radius d:
// 2 pi lambda * int_d^inf x sP/(x^4 + sP) dx, integrated numerically with x = d/t.
double tier_exponent(double lambda_m2, double p_mw, double s, double d) {
  const double sp = s * p_mw;
  const double d2 = d * d;
  auto f = [&](double t) { return sp * d2 * t / (d2 * d2 + sp * t * t * t * t); };
  const double v = integrate_or_throw(f, 0.0, 1.0, {1e-12, 0.0, 2000}, "tier_exponent");
  return 2.0 * std::numbers::pi * lambda_m2 * v;
}

// P{S > g (S' + z), S' > gp (S + z)} for exponential S, S' with means a, b,
// at z = 0, by integrating over S'.
double no_interference_jccdf(double g, double gp, double a, double b) {
  auto f = [&](double t) {  // s' = -b ln t
    const double sp = -b * std::log(t);
    const double lo = g * sp, hi = sp / gp;
    return hi > lo ? std::exp(-lo / a) - std::exp(-hi / a) : 0.0;
  };
  return integrate_or_throw(f, 0.0, 1.0, {1e-12, 1e-15, 2000}, "no_interference_jccdf");
}

double fd_mixed(const AnalyticEngine& e, double g, double gp, double r, double rp) {
  const double h = 1e-4 * g, k = 1e-4 * gp;
  return (e.jccdf_cond(g + h, gp + k, r, rp) - e.jccdf_cond(g + h, gp - k, r, rp) -
          e.jccdf_cond(g - h, gp + k, r, rp) + e.jccdf_cond(g - h, gp - k, r, rp)) /
         (4.0 * h * k);
}

}  // namespace

TEST(Analytic, LaplaceMatchesNumericPgfl) {
  const RadioParams rp;
  IcicParams ic;
  ic.alpha = 0.3;
  ic.beta = 0.4;
  const AnalyticEngine e(rp, ic);
  const double p = std::pow(10.0, 3.5), pp = std::pow(10.0, 1.9);
  for (double s : {1e3, 3.16e4, 1e6, 1e8}) {
    for (auto [r, rpi] : {std::pair{200.0, 100.0}, std::pair{50.0, 300.0}}) {
      const double expo = tier_exponent(0.4 * 4.6e-6, p, s, r) + tier_exponent(0.6 * 4.6e-6, 0.3 * p, s, r) +
                          tier_exponent(13.8e-6, pp, s, rpi);
      EXPECT_NEAR(e.laplace_z(s, r, rpi), std::exp(-expo), 1e-10 + 1e-8 * std::exp(-expo));
    }
  }
  EXPECT_DOUBLE_EQ(e.laplace_z(0.0, 100.0, 100.0), 1.0);
  EXPECT_THROW(e.laplace_z(-1.0, 100.0, 100.0), std::domain_error);
}

TEST(Analytic, JccdfWithoutInterferenceMatchesDirectIntegral) {
  RadioParams rp;
  rp.lambda_macro = 1e-9;
  rp.lambda_pico = 1e-9;
  const AnalyticEngine e(rp, IcicParams{});
  const double p = std::pow(10.0, 3.5), pp = std::pow(10.0, 1.9);
  for (auto [g, gp, r, rpi] : {std::array{0.5, 0.3, 200.0, 100.0}, std::array{2.0, 0.1, 80.0, 150.0},
                               std::array{0.05, 4.0, 400.0, 30.0}}) {
    const double a = p / std::pow(r, 4), b = pp / std::pow(rpi, 4);
    EXPECT_NEAR(e.jccdf_cond(g, gp, r, rpi), no_interference_jccdf(g, gp, a, b), 1e-8);
  }
}

TEST(Analytic, JccdfBoundaryValues) {
  const AnalyticEngine e(RadioParams{}, IcicParams{});
  EXPECT_NEAR(e.jccdf_cond(0.0, 0.0, 150.0, 90.0), 1.0, 1e-14);
  EXPECT_EQ(e.jccdf_cond(2.0, 0.5, 150.0, 90.0), 0.0);  // g gp >= 1 is impossible
  EXPECT_EQ(e.jpdf_cond(2.0, 0.6, 150.0, 90.0), 0.0);
  EXPECT_THROW(e.jccdf_cond(1.0, 1.0, 0.0, 90.0), std::domain_error);
}

TEST(Analytic, JpdfEqualsFiniteDifferenceMixedPartial) {
  const AnalyticEngine e(RadioParams{}, IcicParams{});
  std::mt19937_64 eng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 40; ++i) {
    const double g = std::exp(std::log(1e-2) + u(eng) * std::log(1e4));
    const double gp = std::exp(std::log(1e-2) + u(eng) * std::log(0.9 / g / 1e-2));
    const double r = 40.0 + 360.0 * u(eng);
    const double rpi = 15.0 + 285.0 * u(eng);
    const double fd = fd_mixed(e, g, gp, r, rpi);
    const double an = e.jpdf_cond(g, gp, r, rpi);
    EXPECT_NEAR(an, fd, std::max(1e-6, 1e-3 * std::abs(fd))) << g << ' ' << gp << ' ' << r << ' ' << rpi;
  }
}

TEST(Analytic, FirstPartialsMatchFiniteDifferences) {
  const AnalyticEngine e(RadioParams{}, IcicParams{});
  const double g = 0.7, gp = 0.4, r = 180.0, rpi = 60.0, h = 1e-6;
  const double fg = (e.jccdf_cond(g + h, gp, r, rpi) - e.jccdf_cond(g - h, gp, r, rpi)) / (2 * h);
  const double fgp = (e.jccdf_cond(g, gp + h, r, rpi) - e.jccdf_cond(g, gp - h, r, rpi)) / (2 * h);
  EXPECT_NEAR(e.jccdf_dgamma(g, gp, r, rpi), fg, 1e-7);
  EXPECT_NEAR(e.jccdf_dgamma_pico(g, gp, r, rpi), fgp, 1e-7);
}

TEST(Analytic, RejectsNonQuarticPathLoss) {
  RadioParams rp;
  rp.delta = 3.5;
  EXPECT_THROW(AnalyticEngine(rp, IcicParams{}), std::invalid_argument);
}

TEST(Analytic, CategoryProbabilitiesSumToOne) {
  for (double tau : {0.0, 12.0}) {
    IcicParams ic;
    ic.tau_db = tau;
    const auto p = category_probabilities(RadioParams{}, ic);
    double sum = 0.0;
    for (double v : p.values) {
      EXPECT_GE(v, 0.0);
      sum += v;
    }
    EXPECT_NEAR(sum, 1.0, 2e-3);
  }
}

TEST(Analytic, RangeExpansionMovesUsersToPicos) {
  IcicParams lo, hi;
  lo.tau_db = 0.0;
  hi.tau_db = 12.0;
  const auto a = category_probabilities(RadioParams{}, lo);
  const auto b = category_probabilities(RadioParams{}, hi);
  EXPECT_GT(b[UeCategory::UsfPue] + b[UeCategory::CsfPue], a[UeCategory::UsfPue] + a[UeCategory::CsfPue]);
}

// The 4-D route (numeric inner SIR axis) and the 3-D route (closed-form inner
// axis) must agree on the same region.
TEST(Analytic, FourDimensionalRouteMatchesReduced) {
  const AnalyticEngine e(RadioParams{}, IcicParams{});
  const auto p = e.category_probabilities();
  EXPECT_NEAR(e.region_integral([](double, double) { return 1.0; }, Region::R3), p[UeCategory::CsfPue], 1e-4);
  const double se4 = e.region_integral([](double g, double) { return std::log2(1.0 + g); }, Region::R2);
  const double se3 = e.region_integral_outer([](double g) { return std::log2(1.0 + g); }, Region::R2);
  EXPECT_NEAR(se4, se3, 1e-4 * se3);
}

TEST(Analytic, MeanCountsFollowTierDensities) {
  const RadioParams rp;
  const AnalyticEngine e(rp, IcicParams{});
  PerCategory<double> p;
  p.values = {0.1, 0.2, 0.3, 0.4};
  const auto n = e.mean_counts(p);
  EXPECT_NEAR(n[UeCategory::UsfMue], 0.1 * 200.0 / 4.6, 1e-12);
  EXPECT_NEAR(n[UeCategory::CsfPue], 0.4 * 200.0 / 13.8, 1e-12);
}

TEST(Analytic, MutedCsfGivesNoMacroCsfCapacity) {
  IcicParams ic;
  ic.alpha = 0.0;
  const auto se = AnalyticEngine(RadioParams{}, ic).per_user_se();
  ASSERT_TRUE(se[UeCategory::CsfMue].has_value());
  EXPECT_EQ(*se[UeCategory::CsfMue], 0.0);
  EXPECT_GT(*se[UeCategory::CsfPue], 0.0);
}

TEST(Analytic, AllUsfDutyLeavesCsfUsersIdle) {
  IcicParams ic;
  ic.beta = 1.0;
  const auto se = AnalyticEngine(RadioParams{}, ic).per_user_se();
  EXPECT_EQ(se[UeCategory::CsfMue].value_or(0.0), 0.0);
  EXPECT_EQ(se[UeCategory::CsfPue].value_or(0.0), 0.0);
  EXPECT_GT(se[UeCategory::UsfMue].value_or(0.0), 0.0);
}

TEST(Analytic, PercentileInvertsCdf) {
  const AnalyticEngine e(RadioParams{}, IcicParams{});
  const auto p = e.percentile(UeCategory::UsfPue, 0.05);
  ASSERT_TRUE(p.converged);
  EXPECT_NEAR(e.throughput_cdf(UeCategory::UsfPue, p.value), 0.05, 1e-3);
  EXPECT_LE(e.throughput_cdf(UeCategory::UsfPue, 0.5 * p.value), 0.05);
}

TEST(Analytic, ThroughputCdfIsMonotone) {
  const AnalyticEngine e(RadioParams{}, IcicParams{});
  double prev = 0.0;
  for (double c : {0.05, 0.2, 0.5, 1.0, 2.0, 4.0, 8.0, 25.0}) {
    const double v = e.throughput_cdf(UeCategory::CsfMue, c);
    EXPECT_GE(v, prev - 1e-9);
    EXPECT_LE(v, 1.0 + 1e-6);
    prev = v;
  }
  EXPECT_GT(prev, 0.99);
}

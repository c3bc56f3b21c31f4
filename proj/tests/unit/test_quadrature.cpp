#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hetnet/quadrature.hpp"

using namespace hetnet;

TEST(Quadrature, Polynomial) {
  const auto r = integrate_adaptive([](double x) { return x * x * x; }, 0.0, 2.0, {});
  EXPECT_NEAR(r.value, 4.0, 1e-12);
  EXPECT_TRUE(r.converged);
}

TEST(Quadrature, PeakedIntegrand) {
  // integral of 1/(1e-4 + x^2) over [-1, 1] = 2 atan(100)/0.01
  const QuadOptions opt{1e-10, 1e-14, 500};
  const auto r = integrate_adaptive([](double x) { return 1.0 / (1e-4 + x * x); }, -1.0, 1.0, opt);
  EXPECT_NEAR(r.value, 200.0 * std::atan(100.0), 1e-7);
}

TEST(Quadrature, EmptyInterval) {
  EXPECT_EQ(integrate_adaptive([](double) { return 1.0; }, 1.0, 1.0, {}).value, 0.0);
}

TEST(Quadrature, ThrowsWhenToleranceUnreachable) {
  const QuadOptions opt{1e-14, 0.0, 3};
  EXPECT_THROW(integrate_or_throw([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0, opt,
                                  "oscillatory"),
               QuadratureError);
}

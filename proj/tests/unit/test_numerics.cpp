#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "lightclock/error.hpp"
#include "lightclock/numerics.hpp"

using namespace lightclock::numerics;

TEST(Integrate, PolynomialExact) {
  const auto r = integrate([](double x) { return 3 * x * x; }, 0, 2);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 8.0, 1e-14);
}

TEST(Integrate, ReversedBoundsChangeSign) {
  const auto r = integrate([](double x) { return std::cos(x); }, std::numbers::pi / 2, 0);
  EXPECT_NEAR(r.value, -1.0, 1e-14);
}

TEST(Integrate, AgreesWithBoostOnPeakedIntegrand) {
  auto f = [](double x) { return 1.0 / (1e-4 + (x - 0.3) * (x - 0.3)); };
  const double oracle = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 1.0, 30, 1e-14);
  const auto r = integrate(f, 0.0, 1.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, oracle, 1e-10 * oracle);
}

TEST(Integrate, Deterministic) {
  auto f = [](double x) { return std::sin(1 / (x + 0.05)); };
  const auto a = integrate(f, 0, 1);
  const auto b = integrate(f, 0, 1);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.intervals, b.intervals);
}

TEST(Bisect, FindsRoot) {
  EXPECT_NEAR(bisect([](double x) { return x * x - 2; }, 0, 2), std::sqrt(2.0), 1e-15);
}

TEST(Bisect, RequiresSignChange) {
  EXPECT_THROW(bisect([](double x) { return x * x + 1; }, -1, 1), lightclock::DomainError);
}

TEST(CentralDifference, Quadratic) {
  EXPECT_NEAR(central_difference([](double x) { return x * x; }, 3, 1e-3), 6, 1e-9);
}

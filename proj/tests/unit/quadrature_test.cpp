#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "generators.hpp"
#include "relay_rates/error.hpp"
#include "relay_rates/quadrature.hpp"
#include "relay_rates/relay_power.hpp"
#include "relay_rates/spectra.hpp"

namespace relay_rates {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

TEST(Quadrature, CosineIntegratesToZero) {
  EXPECT_NEAR(integrate_periodic_1d([](double t) { return std::cos(t); }).value, 0.0, 1e-12);
}

TEST(Quadrature, ConstantDensityIntegratesToOne) {
  EXPECT_NEAR(integrate_periodic_1d([](double) { return 1.0 / kTwoPi; }).value, 1.0, 1e-14);
}

TEST(Quadrature, LogOfShiftedCosine) {
  const auto r = integrate_periodic_1d([](double t) { return std::log(2.0 + std::cos(t)) / kTwoPi; });
  EXPECT_NEAR(r.value, std::log((2.0 + std::sqrt(3.0)) / 2.0), 1e-13);
  EXPECT_LT(r.est_error, 1e-9);
}

TEST(Quadrature, TwoDimensionalBasics) {
  EXPECT_NEAR(integrate_periodic_2d([](double t, double u) { return std::cos(t) * std::cos(u); }).value,
              0.0, 1e-12);
  EXPECT_NEAR(integrate_periodic_2d([](double, double) { return 1.0 / (kTwoPi * kTwoPi); }).value,
              1.0, 1e-11);
}

TEST(Quadrature, RelayPowerDoubleIntegralMatchesSingleIntegral) {
  const SystemParams p = reference_params(0.1);
  const double g = 0.4;
  const auto two_d = integrate_periodic_2d([&](double th, double ph) {
    const double c = std::cos(th);
    const double h1 = p.beta + 2 * p.alpha * c;
    return (p.power_mt * h1 * h1 + p.var_z) * g * g /
           (1 - 4 * g * p.mu * c * std::cos(ph) + 4 * g * g * p.mu * p.mu * c * c) /
           (kTwoPi * kTwoPi);
  });
  const auto one_d = integrate_periodic_1d([&](double th) {
    const double c = std::cos(th);
    const double h1 = p.beta + 2 * p.alpha * c;
    return (p.power_mt * h1 * h1 + p.var_z) * g * g / (1 - 4 * g * g * p.mu * p.mu * c * c) / kTwoPi;
  });
  EXPECT_NEAR(two_d.value, one_d.value, 1e-8 * one_d.value);
}

TEST(Quadrature, ExactForLowDegreeTrigPolynomials) {
  testing::ParamGenerator gen(21);
  for (int trial = 0; trial < 20; ++trial) {
    double a[6], b[6];
    for (int k = 0; k < 6; ++k) {
      a[k] = gen.uniform(-1, 1);
      b[k] = gen.uniform(-1, 1);
    }
    auto poly = [&](double t) {
      double s = a[0];
      for (int k = 1; k <= 5; ++k) s += a[k] * std::cos(k * t) + b[k] * std::sin(k * t);
      return s;
    };
    QuadratureSettings s;
    s.initial_points = 16;
    EXPECT_NEAR(integrate_periodic_1d(poly, s).value, kTwoPi * a[0], 1e-13);
    EXPECT_NEAR(integrate_periodic_2d([&](double t, double u) { return poly(t) * poly(u); }, s).value,
                kTwoPi * a[0] * kTwoPi * a[0], 1e-11);
  }
}

TEST(Quadrature, NonFiniteIntegrandIsReported) {
  try {
    integrate_periodic_1d([](double t) {
      return t > 1.0 ? std::numeric_limits<double>::quiet_NaN() : 1.0;
    });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonFinite);
  }
  EXPECT_THROW(integrate_periodic_2d([](double, double) {
                 return std::numeric_limits<double>::infinity();
               }),
               Error);
}

TEST(Quadrature, NoConvergenceCarriesBestValue) {
  QuadratureSettings s;
  s.initial_points = 8;
  s.max_points = 1024;
  // Cusps at 0 and pi: only algebraic convergence.
  try {
    integrate_periodic_1d([](double t) { return std::sqrt(std::abs(std::sin(t))); }, s);
    FAIL();
  } catch (const NoConvergenceError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoConvergence);
    const double exact = 2.0 * std::sqrt(std::numbers::pi) * std::tgamma(0.75) / std::tgamma(1.25);
    EXPECT_NEAR(e.best_value(), exact, 1e-2);
    EXPECT_GT(e.est_error(), s.rel_tol);
    EXPECT_EQ(e.points(), 1024);
  }
}

TEST(Quadrature, SettingsAreChecked) {
  QuadratureSettings s;
  s.initial_points = 12;
  EXPECT_THROW(s.check(), Error);
  s.initial_points = 4;
  EXPECT_THROW(s.check(), Error);
  s.initial_points = 256;
  s.max_points = 128;
  EXPECT_THROW(s.check(), Error);
  EXPECT_NO_THROW(QuadratureSettings{}.check());
}

TEST(Quadrature, VectorValuedComponentsShareTheGrid) {
  const auto r = integrate_periodic_1d_n<3>(
      [](double t) {
        return std::array<double, 3>{1.0, std::cos(t) * std::cos(t), std::exp(std::cos(t))};
      },
      QuadratureSettings{});
  EXPECT_NEAR(r.value[0], kTwoPi, 1e-13);
  EXPECT_NEAR(r.value[1], std::numbers::pi, 1e-13);
  EXPECT_NEAR(r.value[2], kTwoPi * std::cyl_bessel_i(0.0, 1.0), 1e-12);
}

}  // namespace
}  // namespace relay_rates

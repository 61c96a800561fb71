#include <gtest/gtest.h>

#include <cmath>

#include "frozen_values.hpp"
#include "generators.hpp"
#include "relay_rates/error.hpp"
#include "relay_rates/relay_power.hpp"

namespace relay_rates {
namespace {

SystemParams unit_powers(double mu) {
  SystemParams p;
  p.alpha = 1.0;
  p.beta = 1.0;
  p.gamma = 1.0;
  p.eta = 1.0;
  p.mu = mu;
  return p;
}

TEST(RelayPower, DirectionalClosedForm) {
  testing::ParamGenerator gen(17);
  for (int i = 0; i < 100; ++i) {
    SystemParams p = gen.params();
    p.mu = 0.0;
    const double g = gen.uniform(0.0, 5.0);
    const double expect =
        g * g * (p.power_mt * (p.beta * p.beta + 2 * p.alpha * p.alpha) + p.var_z);
    EXPECT_NEAR(relay_power_closed(p, g), expect, 1e-13 * expect);
    // Trig-polynomial integrand: exact at the first grid level.
    EXPECT_NEAR(relay_power_integral_1d(p, g), expect, 1e-12 * expect);
  }
}

TEST(RelayPower, ZeroGainIsSilent) {
  const SystemParams p = reference_params(0.3);
  EXPECT_EQ(relay_power_closed(p, 0.0), 0.0);
  EXPECT_EQ(relay_power_integral_1d(p, 0.0), 0.0);
  EXPECT_EQ(relay_power_integral_2d(p, 0.0, 2), 0.0);
}

TEST(RelayPower, RelayNoiseOnlyPoint) {
  SystemParams p = reference_params(0.25);
  p.power_mt = 1e-300;  // P must be positive; this is P = 0 to double precision
  p.var_z = 1.0;
  const double closed = relay_power_closed(p, 1.0);
  EXPECT_NEAR(closed, frozen::kRelayPowerUnit, 1e-12);
  EXPECT_NEAR(relay_power_integral_1d(p, 1.0), closed, 1e-9 * closed);
  EXPECT_NEAR(relay_power_integral_2d(p, 1.0, 1), closed, 1e-8 * closed);
}

TEST(RelayPower, ReferencePointThreeWays) {
  const SystemParams p = reference_params(0.1);
  const double closed = relay_power_closed(p, 0.4);
  EXPECT_NEAR(closed, frozen::kRelayPowerRef, 1e-12 * closed);
  EXPECT_NEAR(relay_power_integral_1d(p, 0.4), closed, 1e-9 * closed);
  EXPECT_NEAR(relay_power_integral_2d(p, 0.4, 1), closed, 1e-8 * closed);
}

TEST(RelayPower, DelayDoesNotChangeThePower) {
  const SystemParams p = reference_params(0.1);
  const double one = relay_power_integral_2d(p, 0.4, 1);
  EXPECT_NEAR(relay_power_integral_2d(p, 0.4, 3), one, 1e-7 * one);
}

TEST(RelayPower, RandomDrawsAgree) {
  testing::ParamGenerator gen(23);
  for (int i = 0; i < 100; ++i) {
    const SystemParams p = gen.params();
    const double g = gen.stable_gain(p);
    const double closed = relay_power_closed(p, g);
    const double tol = 1e-8 * std::max(closed, 1e-300);
    EXPECT_NEAR(relay_power_integral_1d(p, g), closed, tol) << "draw " << i;
  }
}

TEST(RelayPower, StrictlyIncreasingInGain) {
  for (double mu : {0.0, 0.1, 0.3, 0.45}) {
    const SystemParams p = reference_params(mu);
    const double top = mu > 0 ? 0.999 / (2 * mu) : 10.0;
    double prev = -1.0;
    for (int i = 0; i <= 2000; ++i) {
      const double v = relay_power_closed(p, top * i / 2000);
      EXPECT_GT(v, prev);
      prev = v;
    }
  }
}

TEST(RelayPower, DivergesAtTheStabilityEdge) {
  const SystemParams p = unit_powers(0.025);
  double prev = 0.0;
  for (double eps : {1e-3, 1e-5, 1e-7}) {
    const double v = relay_power_closed(p, (1 - eps) / (2 * p.mu));
    EXPECT_GT(v, 3.0 * prev);
    prev = v;
  }
  EXPECT_GT(prev, 1e6);
}

TEST(RelayPower, RejectsUnstableOrNegativeGain) {
  const SystemParams p = reference_params(0.25);
  for (double g : {2.0, 5.0}) {
    try {
      relay_power_closed(p, g);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnstableGain);
    }
  }
  EXPECT_THROW(relay_power_integral_1d(p, 2.0), Error);
  EXPECT_THROW(relay_power_integral_2d(p, 2.0, 1), Error);
  EXPECT_THROW(relay_power_closed(p, -0.1), Error);
}

TEST(GainSolver, DirectionalExample) {
  SystemParams p;
  p.alpha = 0.0;
  p.beta = 1.0;
  p.power_mt = 1.0;
  p.power_rt = 2.0;
  p.var_z = 1.0;
  const GainSolution s = solve_optimal_gain_mcp(p);
  EXPECT_DOUBLE_EQ(s.gain, 1.0);
  EXPECT_EQ(s.binding, Binding::PowerConstraint);
  EXPECT_NEAR(s.achieved_power, 2.0, 1e-14);
}

TEST(GainSolver, ReferenceResidual) {
  for (double mu : {0.0, 0.1, 0.2, 0.3, 0.4}) {
    const SystemParams p = reference_params(mu);
    const GainSolution s = solve_optimal_gain_mcp(p);
    EXPECT_EQ(s.binding, Binding::PowerConstraint);
    EXPECT_LE(std::abs(relay_power_closed(p, s.gain) - p.power_rt), 1e-10 * p.power_rt);
    EXPECT_TRUE(is_stable_gain(p, s.gain));
  }
  EXPECT_NEAR(solve_optimal_gain_mcp(reference_params(0.1)).gain, frozen::kOptimalGainMu01,
              1e-9);
}

TEST(GainSolver, ApproachesTheStabilityLimit) {
  SystemParams p = reference_params(0.2);
  double prev = 0.0;
  for (double q : {1e2, 1e4, 1e6}) {
    p.power_rt = q;
    const double g = solve_optimal_gain_mcp(p).gain;
    EXPECT_GT(g, prev);
    EXPECT_LT(g, 2.5);
    prev = g;
  }
  EXPECT_GE(prev, 0.999 * 2.5);
}

TEST(GainSolver, RandomDrawsHitTheTarget) {
  testing::ParamGenerator gen(29);
  for (int i = 0; i < 200; ++i) {
    const SystemParams p = gen.params();
    const GainSolution s = solve_optimal_gain_mcp(p);
    EXPECT_TRUE(is_stable_gain(p, s.gain));
    EXPECT_LE(std::abs(s.achieved_power - p.power_rt), 1e-10 * p.power_rt);
    EXPECT_NEAR(relay_power_closed(p, s.gain), s.achieved_power, 1e-14 * p.power_rt);
  }
}

TEST(GainSolver, DirectionalGainSaturatesTheConstraint) {
  const SystemParams p = reference_params(0.3);
  const double g = optimal_gain_directional(p);
  SystemParams da = p;
  da.mu = 0.0;
  EXPECT_NEAR(relay_power_closed(da, g), p.power_rt, 1e-12 * p.power_rt);
  EXPECT_NEAR(g, frozen::kDaGain, 1e-12);
}

}  // namespace
}  // namespace relay_rates

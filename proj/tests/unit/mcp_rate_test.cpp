#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "frozen_values.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "relay_rates/error.hpp"
#include "relay_rates/mcp_rate.hpp"
#include "relay_rates/relay_power.hpp"

namespace relay_rates {
namespace {

constexpr double kPi = std::numbers::pi;

SystemParams isolated() {
  SystemParams p;
  p.alpha = p.eta = p.mu = 0.0;
  p.beta = p.gamma = 1.0;
  p.power_mt = 1.0;
  p.power_rt = 2.0;
  return p;
}

TEST(McpRate, IsolatedCellExample) {
  const RateResult r = mcp_rate_closed(isolated(), 1.0);
  EXPECT_NEAR(r.rate, std::log2(1.5), 1e-14);
  EXPECT_EQ(r.scheme, Scheme::MCP);
  EXPECT_EQ(r.method, Method::ClosedForm);
  EXPECT_EQ(r.gain_used, 1.0);
  EXPECT_NEAR(r.nats(), std::log(1.5), 1e-14);
}

TEST(McpRate, ZeroGain) {
  const SystemParams p = reference_params(0.2);
  EXPECT_EQ(mcp_rate_closed(p, 0.0).rate, 0.0);
  EXPECT_EQ(mcp_rate_integral_2d(p, 0.0, 1).rate, 0.0);
  EXPECT_EQ(mcp_rate_da(p, 0.0).rate, 0.0);
}

TEST(McpRate, ReferenceOptimum) {
  const SystemParams p = reference_params(0.1);
  const RateResult r = mcp_rate_optimal(p);
  EXPECT_NEAR(r.gain_used, frozen::kOptimalGainMu01, 1e-9);
  EXPECT_NEAR(r.rate, frozen::kMcpRateMu01, 1e-9);
  const RateResult two_d = mcp_rate_integral_2d(p, r.gain_used, 1);
  EXPECT_EQ(two_d.method, Method::IntegralOracle);
  EXPECT_NEAR(two_d.rate, r.rate, 1e-7 * r.rate);
}

TEST(McpRate, DoubleIntegralIsDelayInvariant) {
  const SystemParams p = reference_params(0.1);
  const double one = mcp_rate_integral_2d(p, 0.4, 1).rate;
  EXPECT_NEAR(mcp_rate_integral_2d(p, 0.4, 2).rate, one, 1e-7 * one);
}

TEST(McpRate, ClosedFormMatchesDoubleIntegralOnRandomDraws) {
  testing::ParamGenerator gen(31);
  for (int i = 0; i < 25; ++i) {
    const SystemParams p = gen.params();
    const double g = gen.stable_gain(p);
    const double closed = mcp_rate_closed(p, g).rate;
    const double two_d = mcp_rate_integral_2d(p, g, p.lambda).rate;
    EXPECT_NEAR(two_d, closed, 1e-6 * std::max(closed, 1e-12)) << "draw " << i;
  }
}

TEST(McpRate, DiscriminantIsSafeOnDenseGrids) {
  testing::ParamGenerator gen(37);
  for (int i = 0; i < 100; ++i) {
    const SystemParams p = gen.params();
    const double g = gen.stable_gain(p, 0.999999);
    for (int k = 0; k < 512; ++k) {
      const double th = 2 * kPi * k / 512;
      const McpTerms t = mcp_terms(p, g, th);
      ASSERT_GE(t.b, std::abs(t.c));
      const double floor = p.var_w * std::pow(1 - 2 * g * p.mu * std::abs(std::cos(th)), 2);
      EXPECT_GE(t.b_minus_abs_c, floor * (1 - 1e-12));
      EXPECT_GE(mcp_log_integrand(p, g, th), 0.0);
    }
  }
}

TEST(McpRate, IncreasingInGain) {
  for (double mu : {0.0, 0.1, 0.3}) {
    const SystemParams p = reference_params(mu);
    const double top = solve_optimal_gain_mcp(p).gain;
    double prev = -1.0;
    for (int i = 0; i <= 40; ++i) {
      const double r = mcp_rate_closed(p, top * i / 40).rate;
      EXPECT_GT(r, prev);
      prev = r;
    }
  }
}

TEST(McpRate, NotInterferenceLimited) {
  SystemParams p = reference_params(0.1);
  const double base = mcp_rate_optimal(p).rate;
  p.power_mt *= 100;
  p.power_rt *= 100;
  EXPECT_GT(mcp_rate_optimal(p).rate, base + 1.0);
}

TEST(McpRate, UnstableGainIsRejected) {
  const SystemParams p = reference_params(0.25);
  try {
    mcp_rate_closed(p, 2.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnstableGain);
  }
  EXPECT_THROW(mcp_rate_integral_2d(p, 2.5, 1), Error);
}

TEST(DirectionalRate, EqualsJointRateWithoutInterRelayCoupling) {
  testing::ParamGenerator gen(41);
  for (int i = 0; i < 50; ++i) {
    SystemParams p = gen.params();
    const double g = gen.uniform(0.0, 5.0);
    const double da = mcp_rate_da(p, g).rate;
    SystemParams zero = p;
    zero.mu = 0.0;
    EXPECT_NEAR(da, mcp_rate_closed(zero, g).rate, 1e-10 * std::max(da, 1e-12));
    EXPECT_NEAR(da, oracle::da_rate_bits(p, g), 1e-9 * std::max(da, 1e-12));
  }
}

TEST(DirectionalRate, ReferenceValue) {
  const SystemParams p = reference_params(0.35);  // mu is ignored
  const RateResult r = mcp_rate_da(p, optimal_gain_directional(p));
  EXPECT_EQ(r.scheme, Scheme::MCP_DA);
  EXPECT_NEAR(r.rate, frozen::kDaRate, 1e-9);
}

TEST(HalfDuplex, ReferenceValueAndSubstitution) {
  const SystemParams p = reference_params();
  const RateResult hd = mcp_rate_half_duplex(p);
  EXPECT_EQ(hd.scheme, Scheme::MCP_HalfDuplex);
  EXPECT_NEAR(hd.rate, frozen::kHalfDuplexRate, 1e-9);
  EXPECT_NEAR(hd.gain_used, frozen::kHalfDuplexGain, 1e-10);

  SystemParams doubled = p;
  doubled.power_mt *= 2;
  doubled.power_rt *= 2;
  const double g = optimal_gain_directional(doubled);
  EXPECT_NEAR(hd.rate, 0.5 * mcp_rate_da(doubled, g).rate, 1e-14);
}

TEST(HalfDuplex, BelowFullDuplexAtReference) {
  const SystemParams p = reference_params();
  const double full = mcp_rate_da(p, optimal_gain_directional(p)).rate;
  EXPECT_LT(mcp_rate_half_duplex(p).rate, full);
}

TEST(HalfDuplex, VanishesWithPower) {
  SystemParams p = reference_params();
  p.power_mt = p.power_rt = 1e-12;
  EXPECT_LT(mcp_rate_half_duplex(p).rate, 1e-9);
}

TEST(OptimalRate, FullPowerBeatsBackoff) {
  for (double mu : {0.0, 0.1, 0.2, 0.4}) {
    const SystemParams p = reference_params(mu);
    const RateResult r = mcp_rate_optimal(p);
    EXPECT_GE(r.rate, mcp_rate_closed(p, 0.9 * r.gain_used).rate);
  }
}

TEST(OptimalRate, NoCouplingMatchesDirectional) {
  const SystemParams p = reference_params(0.0);
  EXPECT_NEAR(mcp_rate_optimal(p).rate, frozen::kDaRate, 1e-9);
}

TEST(OptimalRate, NonIncreasingInCoupling) {
  double prev = 1e300;
  for (int i = 0; i <= 9; ++i) {
    const double r = mcp_rate_optimal(reference_params(0.05 * i)).rate;
    EXPECT_LE(r, prev);
    prev = r;
  }
}

}  // namespace
}  // namespace relay_rates

#include <gtest/gtest.h>

#include "generators.hpp"
#include "relay_rates/error.hpp"
#include "relay_rates/params.hpp"

namespace relay_rates {
namespace {

ErrorCode code_of(const SystemParams& p, std::string* field = nullptr) {
  try {
    validate(p);
  } catch (const Error& e) {
    if (field) *field = e.field();
    return e.code();
  }
  ADD_FAILURE() << "validate accepted invalid parameters";
  return ErrorCode::InvalidArgument;
}

TEST(Params, AcceptsReferenceSetting) {
  SystemParams p;
  p.alpha = 0.2;
  p.beta = 0.8;
  p.gamma = 0.8;
  p.eta = 0.2;
  p.mu = 0.1;
  p.power_mt = 10;
  p.power_rt = 100;
  p.var_z = 1;
  p.var_w = 1;
  p.lambda = 1;
  EXPECT_EQ(validate(p), p);
  EXPECT_EQ(reference_params(0.1), p);
}

TEST(Params, RejectsZeroPower) {
  SystemParams p = reference_params();
  p.power_mt = 0.0;
  std::string field;
  EXPECT_EQ(code_of(p, &field), ErrorCode::NonPositivePower);
  EXPECT_EQ(field, "power_mt");

  p = reference_params();
  p.power_rt = -1.0;
  EXPECT_EQ(code_of(p, &field), ErrorCode::NonPositivePower);
  EXPECT_EQ(field, "power_rt");

  p = reference_params();
  p.var_z = 0.0;
  EXPECT_EQ(code_of(p, &field), ErrorCode::NonPositivePower);
  EXPECT_EQ(field, "var_z");
}

TEST(Params, RejectsZeroDelay) {
  SystemParams p = reference_params();
  p.lambda = 0;
  std::string field;
  EXPECT_EQ(code_of(p, &field), ErrorCode::ZeroDelay);
  EXPECT_EQ(field, "lambda");
}

TEST(Params, RejectsNegativeGainNamingField) {
  for (double SystemParams::*member :
       {&SystemParams::alpha, &SystemParams::beta, &SystemParams::gamma,
        &SystemParams::eta, &SystemParams::mu}) {
    SystemParams p = reference_params();
    p.*member = -0.01;
    std::string field;
    EXPECT_EQ(code_of(p, &field), ErrorCode::NegativeGain);
    EXPECT_FALSE(field.empty());
  }
}

TEST(Params, GainsAboveOneAreAllowed) {
  SystemParams p = reference_params();
  p.alpha = 3.0;
  p.mu = 2.0;
  EXPECT_NO_THROW(validate(p));
}

TEST(Params, ValidateIsIdempotent) {
  testing::ParamGenerator gen(7);
  for (int i = 0; i < 200; ++i) {
    const SystemParams p = gen.params();
    EXPECT_EQ(validate(validate(p)), validate(p));
  }
}

TEST(Params, DbToLinear) {
  EXPECT_DOUBLE_EQ(db_to_linear(0.0), 1.0);
  EXPECT_DOUBLE_EQ(db_to_linear(10.0), 10.0);
  EXPECT_DOUBLE_EQ(db_to_linear(20.0), 100.0);
  EXPECT_NEAR(linear_to_db(db_to_linear(3.7)), 3.7, 1e-12);
}

TEST(Params, DbToLinearIsMonotoneAndMultiplicative) {
  testing::ParamGenerator gen(11);
  for (int i = 0; i < 500; ++i) {
    const double a = gen.uniform(-60.0, 60.0);
    const double b = gen.uniform(-60.0, 60.0);
    EXPECT_NEAR(db_to_linear(a + b), db_to_linear(a) * db_to_linear(b),
                1e-12 * db_to_linear(a + b));
    if (a < b) EXPECT_LT(db_to_linear(a), db_to_linear(b));
  }
}

TEST(Params, StabilityIsStrict) {
  SystemParams p = reference_params(0.25);
  EXPECT_TRUE(is_stable_gain(p, 1.999));
  EXPECT_FALSE(is_stable_gain(p, 2.0));
  EXPECT_DOUBLE_EQ(stability_limit(p), 2.0);
  try {
    require_stable_gain(p, 2.0);
    FAIL() << "marginal gain accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnstableGain);
  }
  EXPECT_THROW(require_stable_gain(p, -1.0), Error);
  EXPECT_TRUE(std::isinf(stability_limit(reference_params(0.0))));
}

}  // namespace
}  // namespace relay_rates

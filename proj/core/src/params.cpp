#include "relay_rates/params.hpp"

#include <cmath>
#include <string>

#include "relay_rates/error.hpp"

namespace relay_rates {
namespace {

void check_gain(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::NonFinite, name, std::string(name) + " is not finite");
  }
  if (v < 0.0) {
    throw Error(ErrorCode::NegativeGain, name,
                std::string(name) + " must be nonnegative");
  }
}

void check_power(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::NonFinite, name, std::string(name) + " is not finite");
  }
  if (!(v > 0.0)) {
    throw Error(ErrorCode::NonPositivePower, name,
                std::string(name) + " must be strictly positive");
  }
}

}  // namespace

SystemParams validate(const SystemParams& raw) {
  check_gain(raw.alpha, "alpha");
  check_gain(raw.beta, "beta");
  check_gain(raw.gamma, "gamma");
  check_gain(raw.eta, "eta");
  check_gain(raw.mu, "mu");
  check_power(raw.power_mt, "power_mt");
  check_power(raw.power_rt, "power_rt");
  check_power(raw.var_z, "var_z");
  check_power(raw.var_w, "var_w");
  if (raw.lambda < 1) {
    throw Error(ErrorCode::ZeroDelay, "lambda", "lambda must be at least 1");
  }
  return raw;
}

double db_to_linear(double x_db) noexcept { return std::pow(10.0, x_db / 10.0); }

double linear_to_db(double x) noexcept { return 10.0 * std::log10(x); }

bool is_stable_gain(const SystemParams& p, double g) noexcept {
  return 2.0 * p.mu * g < 1.0;
}

double stability_limit(const SystemParams& p) noexcept {
  return p.mu > 0.0 ? 1.0 / (2.0 * p.mu)
                    : std::numeric_limits<double>::infinity();
}

void require_stable_gain(const SystemParams& p, double g) {
  if (!std::isfinite(g) || g < 0.0) {
    throw Error(ErrorCode::NegativeGain, "gain",
                "relay gain must be finite and nonnegative");
  }
  if (!is_stable_gain(p, g)) {
    throw Error(ErrorCode::UnstableGain, "gain",
                "relay gain " + std::to_string(g) +
                    " violates 2*mu*g < 1 (mu = " + std::to_string(p.mu) + ")");
  }
}

std::string_view to_string(Binding b) noexcept {
  switch (b) {
    case Binding::PowerConstraint: return "PowerConstraint";
    case Binding::StabilityBound: return "StabilityBound";
    case Binding::Interior: return "Interior";
  }
  return "Unknown";
}

SystemParams reference_params(double mu) {
  SystemParams p;
  p.alpha = 0.2;
  p.eta = 0.2;
  p.beta = 0.8;
  p.gamma = 0.8;
  p.mu = mu;
  p.power_mt = db_to_linear(10.0);
  p.power_rt = db_to_linear(20.0);
  p.var_z = 1.0;
  p.var_w = 1.0;
  p.lambda = 1;
  return p;
}

}  // namespace relay_rates

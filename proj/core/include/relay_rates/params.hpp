#pragma once

#include <limits>
#include <string_view>

namespace relay_rates {

/// Cell-homogeneous parameterization of the relay-assisted linear cellular
/// uplink. Gains are amplitudes: the corresponding power gains are their
/// squares.
struct SystemParams {
  double alpha = 0.0;     ///< MT -> adjacent RT
  double beta = 0.0;      ///< MT -> local RT
  double gamma = 0.0;     ///< RT -> local BS
  double eta = 0.0;       ///< RT -> adjacent BS
  double mu = 0.0;        ///< RT -> adjacent RT
  double power_mt = 1.0;  ///< MT transmit power P
  double power_rt = 1.0;  ///< RT average power budget Q
  double var_z = 1.0;     ///< relay-stage noise variance
  double var_w = 1.0;     ///< BS-stage noise variance
  int lambda = 1;         ///< relay processing delay in symbols

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Returns `raw` unchanged if every invariant holds; throws relay_rates::Error
/// naming the first offending field otherwise.
SystemParams validate(const SystemParams& raw);

double db_to_linear(double x_db) noexcept;
double linear_to_db(double x) noexcept;

/// The feedback loop through adjacent relays is stable iff 2*mu*g < 1.
bool is_stable_gain(const SystemParams& p, double g) noexcept;

/// 1/(2 mu), or +inf when mu == 0.
double stability_limit(const SystemParams& p) noexcept;

/// Throws NegativeGain for g < 0 (or non-finite g) and UnstableGain when
/// 2*mu*g >= 1.
void require_stable_gain(const SystemParams& p, double g);

enum class Binding { PowerConstraint, StabilityBound, Interior };

std::string_view to_string(Binding b) noexcept;

struct GainSolution {
  double gain = 0.0;
  double achieved_power = 0.0;
  Binding binding = Binding::PowerConstraint;
};

/// P/sigma^2 = 10 dB, Q/sigma^2 = 20 dB, sigma_Z^2 = sigma_W^2 = 1,
/// alpha = eta = 0.2, beta = gamma = 0.8, delay 1.
SystemParams reference_params(double mu = 0.0);

}  // namespace relay_rates

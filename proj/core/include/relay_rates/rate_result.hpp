#pragma once

#include <numbers>
#include <string_view>

namespace relay_rates {

enum class Scheme { MCP, MCP_DA, MCP_HalfDuplex, SCP };
enum class Method { ClosedForm, IntegralOracle, Simulation };
enum class RateUnit { Bits, Nats };

std::string_view to_string(Scheme s) noexcept;
std::string_view to_string(Method m) noexcept;
std::string_view to_string(RateUnit u) noexcept;

/// Per-cell sum-rate. `rate` is in bits per channel use per cell.
struct RateResult {
  double rate = 0.0;
  Scheme scheme = Scheme::MCP;
  double gain_used = 0.0;
  Method method = Method::ClosedForm;

  double nats() const noexcept { return rate * std::numbers::ln2; }
  double in(RateUnit unit) const noexcept {
    return unit == RateUnit::Bits ? rate : nats();
  }
};

inline double nats_to_bits(double nats) noexcept {
  return nats / std::numbers::ln2;
}

}  // namespace relay_rates

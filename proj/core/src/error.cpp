#include "relay_rates/error.hpp"

#include <string>

namespace relay_rates {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositivePower: return "NonPositivePower";
    case ErrorCode::NegativeGain: return "NegativeGain";
    case ErrorCode::ZeroDelay: return "ZeroDelay";
    case ErrorCode::UnstableGain: return "UnstableGain";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string field, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      field_(std::move(field)) {}

NoConvergenceError::NoConvergenceError(double best_value, double est_error,
                                       int points)
    : Error(ErrorCode::NoConvergence, "quadrature",
            "no convergence at " + std::to_string(points) +
                " points (relative change " + std::to_string(est_error) + ")"),
      best_value_(best_value),
      est_error_(est_error),
      points_(points) {}

}  // namespace relay_rates

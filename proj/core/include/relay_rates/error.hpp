#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace relay_rates {

enum class ErrorCode {
  NonPositivePower,
  NegativeGain,
  ZeroDelay,
  UnstableGain,
  NonFinite,
  NoConvergence,
  InsufficientSamples,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Recoverable failure raised by the library. `field()` names the offending
/// input (parameter name, setting, ...) when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string field, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

/// Quadrature gave up at max_points. Carries the best value reached.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(double best_value, double est_error, int points);

  double best_value() const noexcept { return best_value_; }
  double est_error() const noexcept { return est_error_; }
  int points() const noexcept { return points_; }

 private:
  double best_value_;
  double est_error_;
  int points_;
};

}  // namespace relay_rates

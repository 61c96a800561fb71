#include "relay_rates/quadrature.hpp"

#include <bit>
#include <string>

namespace relay_rates {

void QuadratureSettings::check() const {
  if (initial_points < 8 || !std::has_single_bit(static_cast<unsigned>(initial_points))) {
    throw Error(ErrorCode::InvalidArgument, "initial_points",
                "initial_points must be a power of two >= 8, got " +
                    std::to_string(initial_points));
  }
  if (max_points < initial_points || max_points_2d < initial_points) {
    throw Error(ErrorCode::InvalidArgument, "max_points",
                "max_points must be >= initial_points");
  }
  if (!(rel_tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "rel_tol", "rel_tol must be positive");
  }
}

QuadratureResult integrate_periodic_1d(const std::function<double(double)>& f,
                                       const QuadratureSettings& s) {
  const auto r = integrate_periodic_1d_n<1>(
      [&](double t) { return std::array<double, 1>{f(t)}; }, s);
  return {r.value[0], r.est_error, r.points};
}

QuadratureResult integrate_periodic_2d(
    const std::function<double(double, double)>& f,
    const QuadratureSettings& s) {
  const auto r = integrate_periodic_2d_n<1>(
      [&](double t, double u) { return std::array<double, 1>{f(t, u)}; }, s);
  return {r.value[0], r.est_error, r.points};
}

}  // namespace relay_rates

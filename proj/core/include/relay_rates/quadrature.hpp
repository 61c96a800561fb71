#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>

#include "relay_rates/error.hpp"

namespace relay_rates {

/// Periodic trapezoid settings. Grids start at `initial_points` and double
/// until the relative change between successive levels drops below
/// `rel_tol`. `max_points` caps the 1D grid; `max_points_2d` caps each axis
/// of the 2D tensor grid.
struct QuadratureSettings {
  int initial_points = 256;
  int max_points = 1 << 16;
  int max_points_2d = 4096;
  double rel_tol = 1e-9;

  /// Throws InvalidArgument unless initial_points is a power of two >= 8 and
  /// both caps are >= initial_points.
  void check() const;

  QuadratureSettings tightened(double factor) const {
    QuadratureSettings s = *this;
    s.rel_tol /= factor;
    return s;
  }
};

struct QuadratureResult {
  double value = 0.0;
  double est_error = 0.0;
  int points = 0;  ///< per-axis grid size of the returned level
};

template <std::size_t K>
struct MultiQuadratureResult {
  std::array<double, K> value{};
  double est_error = 0.0;
  int points = 0;
};

/// Integral over [0, 2pi) of a smooth periodic function.
QuadratureResult integrate_periodic_1d(const std::function<double(double)>& f,
                                       const QuadratureSettings& s = {});

/// Integral over [0, 2pi)^2 of a smooth doubly periodic function.
QuadratureResult integrate_periodic_2d(
    const std::function<double(double, double)>& f,
    const QuadratureSettings& s = {});

namespace detail {

template <std::size_t K>
void check_finite(const std::array<double, K>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::NonFinite, "integrand",
                  "integrand evaluated to a non-finite value");
    }
  }
}

// Relative change between two levels. Each component is scaled by the larger
// of |value| and the integral of |f|, so integrals that vanish by symmetry
// still converge.
template <std::size_t K>
double relative_change(const std::array<double, K>& prev,
                       const std::array<double, K>& next,
                       const std::array<double, K>& abs_next) {
  double worst = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    const double scale = std::max(std::abs(next[k]), abs_next[k]);
    const double diff = std::abs(next[k] - prev[k]);
    if (diff == 0.0) continue;
    worst = std::max(worst, scale > 0.0 ? diff / scale : diff);
  }
  return worst;
}

}  // namespace detail

/// Vector-valued periodic trapezoid: every component of `f(theta)` is
/// integrated on the same grid and convergence is required of all of them.
/// `f` must return std::array<double, K>.
template <std::size_t K, class F>
MultiQuadratureResult<K> integrate_periodic_1d_n(F&& f,
                                                 const QuadratureSettings& s) {
  s.check();
  constexpr double two_pi = 2.0 * std::numbers::pi;

  std::array<double, K> sum{};
  std::array<double, K> abs_sum{};
  auto accumulate = [&](double theta) {
    const std::array<double, K> v = f(theta);
    detail::check_finite(v);
    for (std::size_t k = 0; k < K; ++k) {
      sum[k] += v[k];
      abs_sum[k] += std::abs(v[k]);
    }
  };

  int n = s.initial_points;
  for (int i = 0; i < n; ++i) accumulate(two_pi * i / n);
  auto scaled = [&](const std::array<double, K>& acc, int points) {
    std::array<double, K> out{};
    for (std::size_t k = 0; k < K; ++k) out[k] = acc[k] * two_pi / points;
    return out;
  };
  std::array<double, K> value = scaled(sum, n);
  double change = 0.0;

  while (2 * n <= s.max_points) {
    // Odd points of the doubled grid are the midpoints of the current one.
    for (int i = 0; i < n; ++i) accumulate(two_pi * (2 * i + 1) / (2 * n));
    n *= 2;
    const std::array<double, K> next = scaled(sum, n);
    change = detail::relative_change(value, next, scaled(abs_sum, n));
    value = next;
    if (change < s.rel_tol) return {value, change, n};
  }
  throw NoConvergenceError(value[0], change, n);
}

/// Vector-valued 2D periodic trapezoid on a square tensor grid; both axes
/// double together.
template <std::size_t K, class F>
MultiQuadratureResult<K> integrate_periodic_2d_n(F&& f,
                                                 const QuadratureSettings& s) {
  s.check();
  constexpr double two_pi = 2.0 * std::numbers::pi;

  std::array<double, K> sum{};
  std::array<double, K> abs_sum{};
  auto accumulate = [&](double theta, double phi) {
    const std::array<double, K> v = f(theta, phi);
    detail::check_finite(v);
    for (std::size_t k = 0; k < K; ++k) {
      sum[k] += v[k];
      abs_sum[k] += std::abs(v[k]);
    }
  };
  auto scaled = [&](const std::array<double, K>& acc, int points) {
    std::array<double, K> out{};
    const double cell = two_pi * two_pi / (static_cast<double>(points) * points);
    for (std::size_t k = 0; k < K; ++k) out[k] = acc[k] * cell;
    return out;
  };

  int n = s.initial_points;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) accumulate(two_pi * i / n, two_pi * j / n);
  }
  std::array<double, K> value = scaled(sum, n);
  double change = 0.0;

  const int cap = std::min(s.max_points, s.max_points_2d);
  while (2 * n <= cap) {
    const int m = 2 * n;
    // Points of the doubled grid with at least one odd index are new.
    for (int i = 0; i < m; ++i) {
      const double theta = two_pi * i / m;
      const int step = (i % 2 == 0) ? 2 : 1;
      for (int j = (i % 2 == 0) ? 1 : 0; j < m; j += step) {
        accumulate(theta, two_pi * j / m);
      }
    }
    n = m;
    const std::array<double, K> next = scaled(sum, n);
    change = detail::relative_change(value, next, scaled(abs_sum, n));
    value = next;
    if (change < s.rel_tol) return {value, change, n};
  }
  throw NoConvergenceError(value[0], change, n);
}

}  // namespace relay_rates

#include "relay_rates/relay_power.hpp"

#include <cmath>
#include <numbers>

#include "relay_rates/spectra.hpp"

namespace relay_rates {

double relay_power_closed(const SystemParams& p, double g) {
  require_stable_gain(p, g);
  if (g == 0.0) return 0.0;
  const double x = 2.0 * p.mu * g;
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  const double g2 = g * g;
  return (p.power_mt * p.beta * p.beta + p.var_z) * g2 / s +
         4.0 * p.power_mt * p.alpha * p.alpha * g2 / (s + s * s);
}

double relay_power_integral_1d(const SystemParams& p, double g,
                               const QuadratureSettings& quad) {
  require_stable_gain(p, g);
  if (g == 0.0) return 0.0;
  const double g2 = g * g;
  const double mu2 = p.mu * p.mu;
  const auto r = integrate_periodic_1d(
      [&](double theta) {
        const double c = std::cos(theta);
        const double h1 = p.beta + 2.0 * p.alpha * c;
        return (p.power_mt * h1 * h1 + p.var_z) * g2 /
               (1.0 - 4.0 * g2 * mu2 * c * c);
      },
      quad);
  return r.value / (2.0 * std::numbers::pi);
}

double relay_power_integral_2d(const SystemParams& p, double g, int lambda,
                               const QuadratureSettings& quad) {
  SystemParams q = p;
  q.lambda = lambda;
  require_stable_gain(q, g);
  if (lambda < 1) {
    throw Error(ErrorCode::ZeroDelay, "lambda", "lambda must be at least 1");
  }
  if (g == 0.0) return 0.0;
  const auto r = integrate_periodic_2d_n<1>(
      [&](double theta, double phi) {
        const TransferEval t = eval_transfers(q, g, {theta, phi});
        return std::array<double, 1>{
            (q.power_mt * std::norm(t.h1) + q.var_z) * std::norm(t.hr) /
            std::norm(t.denominator)};
      },
      quad);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return r.value[0] / (two_pi * two_pi);
}

double optimal_gain_directional(const SystemParams& p) {
  return std::sqrt(p.power_rt /
                   (p.power_mt * (p.beta * p.beta + 2.0 * p.alpha * p.alpha) +
                    p.var_z));
}

GainSolution solve_optimal_gain_mcp(const SystemParams& raw, double rel_tol) {
  const SystemParams p = validate(raw);
  const double q = p.power_rt;

  if (p.mu == 0.0) {
    const double g = optimal_gain_directional(p);
    return {g, relay_power_closed(p, g), Binding::PowerConstraint};
  }

  double lo = 0.0;
  double hi = (1.0 - 1e-12) / (2.0 * p.mu);
  const double p_hi = relay_power_closed(p, hi);
  if (p_hi <= q) {
    return {hi, p_hi, Binding::StabilityBound};
  }

  double best = hi;
  double best_residual = p_hi - q;
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double residual = relay_power_closed(p, mid) - q;
    if (std::abs(residual) < std::abs(best_residual)) {
      best = mid;
      best_residual = residual;
    }
    if (std::abs(residual) <= rel_tol * q) break;
    (residual < 0.0 ? lo : hi) = mid;
  }
  return {best, best_residual + q, Binding::PowerConstraint};
}

}  // namespace relay_rates

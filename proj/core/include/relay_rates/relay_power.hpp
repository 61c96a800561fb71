#pragma once

#include "relay_rates/params.hpp"
#include "relay_rates/quadrature.hpp"

namespace relay_rates {

// Relay output power sigma_r^2(g) = E|R|^2 in three equivalent forms. All
// three throw UnstableGain unless 2*mu*g < 1 and NegativeGain for g < 0.

/// Closed form:
///   (P beta^2 + sigma_Z^2) g^2 / sqrt(1 - x^2)
///     + 4 P alpha^2 g^2 / (sqrt(1 - x^2) + 1 - x^2),   x = 2 mu g.
double relay_power_closed(const SystemParams& p, double g);

/// (1/2pi) int (P (beta + 2 alpha cos t)^2 + sigma_Z^2) g^2
///                / (1 - 4 g^2 mu^2 cos^2 t) dt
double relay_power_integral_1d(const SystemParams& p, double g,
                               const QuadratureSettings& quad = {});

/// (1/2pi)^2 double integral of (P|H1|^2 + sigma_Z^2)|Hr|^2 / |1 - Hr H3|^2
/// with relay delay `lambda`.
double relay_power_integral_2d(const SystemParams& p, double g, int lambda,
                               const QuadratureSettings& quad = {});

/// Gain at which the relays transmit at full power when mu is treated as 0:
/// g^2 = Q / (P (beta^2 + 2 alpha^2) + sigma_Z^2).
double optimal_gain_directional(const SystemParams& p);

/// Unique g in (0, 1/(2 mu)) with sigma_r^2(g) = Q, found by bisection on
/// the closed form until |sigma_r^2(g) - Q| <= rel_tol * Q. For mu == 0 the
/// explicit directional-antenna gain is returned.
GainSolution solve_optimal_gain_mcp(const SystemParams& p,
                                    double rel_tol = 1e-10);

}  // namespace relay_rates

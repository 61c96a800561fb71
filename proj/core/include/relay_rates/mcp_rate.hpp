#pragma once

#include "relay_rates/params.hpp"
#include "relay_rates/quadrature.hpp"
#include "relay_rates/rate_result.hpp"

namespace relay_rates {

/// Per-theta terms of the joint-processing rate integrand:
///   A = P g^2 H1^2 H2^2
///   B = sigma_Z^2 g^2 H2^2 + sigma_W^2 (1 + 4 g^2 mu^2 cos^2 t)
///   C = 4 sigma_W^2 g mu cos t
/// `b_minus_abs_c` is B - |C| evaluated in the factored form
/// sigma_Z^2 g^2 H2^2 + sigma_W^2 (1 - 2 g mu |cos t|)^2, which is never
/// negative.
struct McpTerms {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double b_minus_abs_c = 0.0;
};

McpTerms mcp_terms(const SystemParams& p, double g, double theta) noexcept;

/// Natural log of (A + B + sqrt((A+B)^2 - C^2)) / (B + sqrt(B^2 - C^2)),
/// the temporal average of the 2D log-SNR at spatial frequency theta.
double mcp_log_integrand(const SystemParams& p, double g, double theta);

/// Joint multi-cell processing rate as a single theta integral.
RateResult mcp_rate_closed(const SystemParams& p, double g,
                           const QuadratureSettings& quad = {});

/// Same rate from the (theta, phi) double integral of log(1 + S_S / S_N).
RateResult mcp_rate_integral_2d(const SystemParams& p, double g, int lambda,
                                const QuadratureSettings& quad = {});

/// Directional relay antennas: mu is taken as 0 whatever p.mu holds.
RateResult mcp_rate_da(const SystemParams& p, double g,
                       const QuadratureSettings& quad = {});

/// Half-duplex relays: half of the directional-antenna rate with P -> 2P at
/// the full-power gain for (2P, 2Q).
RateResult mcp_rate_half_duplex(const SystemParams& p,
                                const QuadratureSettings& quad = {});

/// Rate at the full-power gain, which maximizes the joint-processing rate.
RateResult mcp_rate_optimal(const SystemParams& p,
                            const QuadratureSettings& quad = {});

}  // namespace relay_rates

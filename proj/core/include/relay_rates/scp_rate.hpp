#pragma once

#include "relay_rates/params.hpp"
#include "relay_rates/quadrature.hpp"
#include "relay_rates/rate_result.hpp"

namespace relay_rates {

/// Temporal PSDs seen by a single-cell receiver at frequency phi.
struct ScpPsdTriple {
  double psd_useful = 0.0;
  double psd_interference = 0.0;
  double psd_noise = 0.0;
};

/// Useful part: P |mean_theta H_S|^2. Interference: P mean_theta
/// |H_S - mean_theta H_S|^2. Noise: sigma_Z^2 mean_theta |H_N|^2 + sigma_W^2.
/// The theta integrals use `quad` tightened tenfold; the delay is p.lambda.
ScpPsdTriple scp_psds(const SystemParams& p, double g, double phi,
                      const QuadratureSettings& quad = {});

/// (1/2pi) int log2(1 + S_U / (S_I + S_N)) dphi.
RateResult scp_rate(const SystemParams& p, double g,
                    const QuadratureSettings& quad = {});

/// Maximizes scp_rate over g in (0, g_o], g_o being the full-power gain:
/// 64-point grid dense near both ends, then golden-section refinement around
/// the best grid point. Binding is Interior when the maximizer sits below
/// g_o by more than the search tolerance.
GainSolution scp_optimal_gain(const SystemParams& p,
                              const QuadratureSettings& quad = {});

/// scp_rate at scp_optimal_gain.
RateResult scp_rate_optimal(const SystemParams& p,
                            const QuadratureSettings& quad = {});

}  // namespace relay_rates

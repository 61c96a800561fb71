#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "relay_rates/params.hpp"
#include "relay_rates/quadrature.hpp"
#include "relay_rates/simulator.hpp"

namespace relay_rates::cli {

struct ValidationCheck {
  std::string name;
  double analytic = 0.0;
  double simulated = 0.0;
  double std_error = 0.0;
  double z = 0.0;
  /// psd_bins only: share of bins with |z| <= z_limit.
  double fraction_within = 1.0;
  bool pass = true;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  double z_limit = 4.0;
  double min_bin_fraction = 0.95;
  bool pass = true;
};

/// z = (simulated - analytic) / std_error; 0 when both the difference and
/// the standard error vanish.
double z_score(double simulated, double analytic, double std_error);

/// Simulates the ring with `simulated` parameters and compares with the
/// analytic predictions computed from `analytic`. Checks: relay power and
/// mean output power (|z| <= 4), and per-bin output PSD (at least 95% of
/// bins with |z| <= 4).
ValidationReport run_validation(const SystemParams& analytic,
                                const SystemParams& simulated,
                                const RingConfig& ring,
                                const PsdSettings& psd = {},
                                const QuadratureSettings& quad = {});

nlohmann::json to_json(const ValidationReport& report);

}  // namespace relay_rates::cli

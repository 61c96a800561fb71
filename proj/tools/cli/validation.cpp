#include "cli/validation.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "relay_rates/relay_power.hpp"
#include "relay_rates/spectra.hpp"

namespace relay_rates::cli {

double z_score(double simulated, double analytic, double std_error) {
  const double diff = simulated - analytic;
  if (std_error > 0.0) return diff / std_error;
  if (diff == 0.0) return 0.0;
  return std::copysign(std::numeric_limits<double>::infinity(), diff);
}

ValidationReport run_validation(const SystemParams& analytic,
                                const SystemParams& simulated,
                                const RingConfig& ring, const PsdSettings& psd,
                                const QuadratureSettings& quad) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  ValidationReport report;
  const double g = ring.gain;

  const Trajectory traj = run_ring(simulated, ring);
  const SimulationEstimate est = estimate_output_psd(traj, psd);

  ValidationCheck power{"relay_power"};
  power.analytic = relay_power_closed(analytic, g);
  power.simulated = est.relay_power_mean;
  power.std_error = est.relay_power_stderr;
  power.z = z_score(power.simulated, power.analytic, power.std_error);
  power.pass = std::abs(power.z) <= report.z_limit;
  report.checks.push_back(power);

  // Mean over the bins: the empirical output power per cell, compared with
  // the averaged analytic PSD on the same (theta, phi) grid.
  const int rows = est.psd_output.rows;
  const int cols = est.psd_output.cols;
  Grid2D expected{rows, cols, std::vector<double>(est.psd_output.data.size())};
  for (int k = 0; k < rows; ++k) {
    for (int j = 0; j < cols; ++j) {
      const FreqPair f{two_pi * k / rows, two_pi * j / cols};
      expected(k, j) = signal_psd(analytic, g, f) + noise_psd(analytic, g, f);
    }
  }

  ValidationCheck level{"output_power"};
  level.analytic =
      integrate_periodic_2d(
          [&](double theta, double phi) {
            const FreqPair f{theta, phi};
            return signal_psd(analytic, g, f) + noise_psd(analytic, g, f);
          },
          quad)
          .value /
      (two_pi * two_pi);
  const RelayPowerEstimate y_power = estimate_output_power(traj, psd.num_batches);
  level.simulated = y_power.mean;
  level.std_error = y_power.std_error;
  level.z = z_score(level.simulated, level.analytic, level.std_error);
  level.pass = std::abs(level.z) <= report.z_limit;
  report.checks.push_back(level);

  ValidationCheck bins{"psd_bins"};
  std::size_t within = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < expected.data.size(); ++i) {
    const double z = z_score(est.psd_output.data[i], expected.data[i], est.psd_stderr.data[i]);
    if (std::abs(z) <= report.z_limit) ++within;
    worst = std::max(worst, std::abs(z));
  }
  bins.fraction_within = static_cast<double>(within) / static_cast<double>(expected.data.size());
  bins.z = worst;
  bins.pass = bins.fraction_within >= report.min_bin_fraction;
  report.checks.push_back(bins);

  for (const auto& c : report.checks) report.pass = report.pass && c.pass;
  return report;
}

nlohmann::json to_json(const ValidationReport& report) {
  auto num = [](double v) {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(v > 0 ? "inf" : "-inf");
  };
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json j{{"name", c.name}, {"pass", c.pass}};
    if (c.name == "psd_bins") {
      j["fraction_within"] = c.fraction_within;
      j["max_abs_z"] = num(c.z);
      j["min_fraction"] = report.min_bin_fraction;
    } else {
      j["analytic"] = c.analytic;
      j["simulated"] = c.simulated;
      j["std_error"] = c.std_error;
      j["z"] = num(c.z);
    }
    checks.push_back(std::move(j));
  }
  return {{"checks", checks}, {"z_limit", report.z_limit}, {"pass", report.pass}};
}

}  // namespace relay_rates::cli

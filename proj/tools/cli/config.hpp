#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "relay_rates/params.hpp"
#include "relay_rates/rate_result.hpp"

namespace relay_rates::cli {

/// Flat key=value settings, later keys overriding earlier ones.
using ConfigMap = std::map<std::string, std::string>;

/// One `key = value` per line; `#` starts a comment. Throws
/// relay_rates::Error(InvalidArgument) naming the line on malformed input.
ConfigMap parse_config(std::istream& in);
ConfigMap load_config_file(const std::string& path);

/// Layers `top` over `base`. Setting a linear power drops the dB form of the
/// same power and vice versa.
ConfigMap overlay(ConfigMap base, const ConfigMap& top);

enum class SweepVar { Mu, Alpha, Eta, PDb, QDb };
enum class OutputFormat { Csv, Json };

std::string_view to_string(SweepVar v) noexcept;
SweepVar parse_sweep_var(std::string_view s);
std::string_view to_string(OutputFormat f) noexcept;
OutputFormat parse_output_format(std::string_view s);
Scheme parse_scheme(std::string_view s);

struct SweepSpec {
  SystemParams base = reference_params();
  /// sigma^2 that dB-valued powers refer to.
  double noise_reference = 1.0;
  SweepVar sweep_var = SweepVar::Mu;
  std::vector<double> values;
  std::vector<Scheme> schemes;
  OutputFormat output_format = OutputFormat::Csv;
  RateUnit unit = RateUnit::Bits;

  /// Throws InvalidArgument on empty/non-increasing values or empty schemes,
  /// and the usual parameter errors on the base parameters.
  void check() const;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

/// Default sweep grid {0, 0.05, ..., 0.45}.
std::vector<double> default_mu_grid();

/// Builds system parameters from recognised keys, starting from `defaults`.
/// Gains are amplitudes unless `power_gains = true`.
SystemParams params_from_config(const ConfigMap& cfg,
                                const SystemParams& defaults = reference_params());
double noise_reference_from_config(const ConfigMap& cfg);

/// Sweep spec from a config map; missing keys take the defaults (reference
/// parameters, mu grid, schemes mcp and scp, csv, bits).
SweepSpec sweep_spec_from_config(const ConfigMap& cfg);

/// Lossless text form that parse_config + sweep_spec_from_config read back.
std::string to_config_text(const SweepSpec& spec);

nlohmann::json to_json(const SystemParams& p);
nlohmann::json to_json(const SweepSpec& spec);
SweepSpec sweep_spec_from_json(const nlohmann::json& j);

/// Shortest round-trip decimal form.
std::string format_number(double v);

/// Parses "a,b,c" or "start:stop:step" into a list of reals.
std::vector<double> parse_values(std::string_view text);

}  // namespace relay_rates::cli

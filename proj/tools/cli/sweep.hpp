#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "relay_rates/params.hpp"
#include "relay_rates/quadrature.hpp"
#include "relay_rates/rate_result.hpp"

namespace relay_rates::cli {

struct SchemeOutcome {
  Scheme scheme = Scheme::MCP;
  double rate = 0.0;  ///< in spec.unit
  double gain = 0.0;
  double relay_power = 0.0;
  Binding binding = Binding::PowerConstraint;
  std::string error;  ///< empty on success
};

struct SweepRow {
  double sweep_value = 0.0;
  std::vector<SchemeOutcome> outcomes;  ///< in spec.schemes order
};

/// Base parameters with the sweep variable set to `value`.
SystemParams params_at(const SweepSpec& spec, double value);

/// Optimal-gain evaluation of one scheme. Never throws: failures land in
/// `error`.
SchemeOutcome evaluate_scheme(const SystemParams& p, Scheme scheme,
                              RateUnit unit, const QuadratureSettings& quad = {});

SweepRow evaluate_row(const SweepSpec& spec, double value,
                      const QuadratureSettings& quad = {});

/// RELAY_RATES_THREADS if set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
int worker_threads_from_env();

/// Rows in sweep order whatever order workers finish in.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads,
                                const QuadratureSettings& quad = {});

/// Header: sweep_var,scheme,rate_bits,gain,relay_power,binding,error
/// (rate_nats in nats mode); one line per (value, scheme).
void write_csv(std::ostream& out, const SweepSpec& spec,
               const std::vector<SweepRow>& rows);

/// JSON array of objects with the CSV column names.
void write_json(std::ostream& out, const SweepSpec& spec,
                const std::vector<SweepRow>& rows);

}  // namespace relay_rates::cli

#include "cli/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <thread>

#include "relay_rates/mcp_rate.hpp"
#include "relay_rates/relay_power.hpp"
#include "relay_rates/scp_rate.hpp"

namespace relay_rates::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string csv_number(double v) { return std::isfinite(v) ? format_number(v) : ""; }

nlohmann::json json_number(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

SystemParams params_at(const SweepSpec& spec, double value) {
  SystemParams p = spec.base;
  switch (spec.sweep_var) {
    case SweepVar::Mu: p.mu = value; break;
    case SweepVar::Alpha: p.alpha = value; break;
    case SweepVar::Eta: p.eta = value; break;
    case SweepVar::PDb: p.power_mt = spec.noise_reference * db_to_linear(value); break;
    case SweepVar::QDb: p.power_rt = spec.noise_reference * db_to_linear(value); break;
  }
  return p;
}

SchemeOutcome evaluate_scheme(const SystemParams& raw, Scheme scheme,
                              RateUnit unit, const QuadratureSettings& quad) {
  SchemeOutcome out;
  out.scheme = scheme;
  try {
    const SystemParams p = validate(raw);
    switch (scheme) {
      case Scheme::MCP: {
        const GainSolution gs = solve_optimal_gain_mcp(p);
        out.rate = mcp_rate_closed(p, gs.gain, quad).in(unit);
        out.gain = gs.gain;
        out.relay_power = gs.achieved_power;
        out.binding = gs.binding;
        break;
      }
      case Scheme::MCP_DA: {
        SystemParams directional = p;
        directional.mu = 0.0;
        out.gain = optimal_gain_directional(p);
        out.rate = mcp_rate_da(p, out.gain, quad).in(unit);
        out.relay_power = relay_power_closed(directional, out.gain);
        out.binding = Binding::PowerConstraint;
        break;
      }
      case Scheme::MCP_HalfDuplex: {
        const RateResult r = mcp_rate_half_duplex(p, quad);
        SystemParams doubled = p;
        doubled.mu = 0.0;
        doubled.power_mt *= 2.0;
        out.rate = r.in(unit);
        out.gain = r.gain_used;
        out.relay_power = relay_power_closed(doubled, r.gain_used);
        out.binding = Binding::PowerConstraint;
        break;
      }
      case Scheme::SCP: {
        const GainSolution gs = scp_optimal_gain(p, quad);
        out.rate = scp_rate(p, gs.gain, quad).in(unit);
        out.gain = gs.gain;
        out.relay_power = gs.achieved_power;
        out.binding = gs.binding;
        break;
      }
    }
  } catch (const std::exception& e) {
    out.rate = out.gain = out.relay_power = kNaN;
    out.error = e.what();
  }
  return out;
}

SweepRow evaluate_row(const SweepSpec& spec, double value,
                      const QuadratureSettings& quad) {
  SweepRow row;
  row.sweep_value = value;
  const SystemParams p = params_at(spec, value);
  for (Scheme s : spec.schemes) row.outcomes.push_back(evaluate_scheme(p, s, spec.unit, quad));
  return row;
}

int worker_threads_from_env() {
  if (const char* env = std::getenv("RELAY_RATES_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads,
                                const QuadratureSettings& quad) {
  spec.check();
  std::vector<SweepRow> rows(spec.values.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      rows[i] = evaluate_row(spec, spec.values[i], quad);
    }
  };
  const auto count = static_cast<std::size_t>(std::max(1, threads));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < std::min(count, rows.size()); ++t) pool.emplace_back(worker);
  worker();
  return rows;
}

void write_csv(std::ostream& out, const SweepSpec& spec,
               const std::vector<SweepRow>& rows) {
  out << "sweep_var,scheme," << (spec.unit == RateUnit::Bits ? "rate_bits" : "rate_nats")
      << ",gain,relay_power,binding,error\n";
  for (const auto& row : rows) {
    for (const auto& o : row.outcomes) {
      std::string err = o.error;
      for (char& c : err) {
        if (c == ',' || c == '\n') c = ';';
      }
      out << format_number(row.sweep_value) << ',' << to_string(o.scheme) << ','
          << csv_number(o.rate) << ',' << csv_number(o.gain) << ','
          << csv_number(o.relay_power) << ','
          << (o.error.empty() ? std::string(to_string(o.binding)) : "") << ',' << err
          << '\n';
    }
  }
}

void write_json(std::ostream& out, const SweepSpec& spec,
                const std::vector<SweepRow>& rows) {
  const char* rate_key = spec.unit == RateUnit::Bits ? "rate_bits" : "rate_nats";
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    for (const auto& o : row.outcomes) {
      nlohmann::json j;
      j["sweep_var"] = row.sweep_value;
      j["scheme"] = std::string(to_string(o.scheme));
      j[rate_key] = json_number(o.rate);
      j["gain"] = json_number(o.gain);
      j["relay_power"] = json_number(o.relay_power);
      j["binding"] = o.error.empty() ? nlohmann::json(std::string(to_string(o.binding)))
                                     : nlohmann::json(nullptr);
      j["error"] = o.error.empty() ? nlohmann::json(nullptr) : nlohmann::json(o.error);
      arr.push_back(std::move(j));
    }
  }
  out << arr.dump(2) << '\n';
}

}  // namespace relay_rates::cli

#include "cli/app.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "cli/config.hpp"
#include "cli/sweep.hpp"
#include "cli/validation.hpp"
#include "relay_rates/error.hpp"
#include "relay_rates/mcp_rate.hpp"
#include "relay_rates/relay_power.hpp"
#include "relay_rates/scp_rate.hpp"

namespace relay_rates::cli {
namespace {

// Parameter flags shared by all subcommands; each maps onto a config key.
struct ParamFlags {
  std::string config_path;
  bool power_gains = false;
  bool nats = false;
  std::map<std::string, std::string> raw;
  std::vector<std::pair<std::string, CLI::Option*>> options;

  void attach(CLI::App& app) {
    app.add_option("--config", config_path, "Flat key=value config file");
    static const std::pair<const char*, const char*> kFlags[] = {
        {"--alpha", "alpha"}, {"--beta", "beta"},     {"--gamma", "gamma"},
        {"--eta", "eta"},     {"--mu", "mu"},         {"--p", "p"},
        {"--p-db", "p_db"},   {"--q", "q"},           {"--q-db", "q_db"},
        {"--sigma2", "sigma2"}, {"--var-z", "var_z"}, {"--var-w", "var_w"},
        {"--lambda", "lambda"}};
    for (const auto& [flag, key] : kFlags) {
      options.emplace_back(key, app.add_option(flag, raw[key]));
    }
    app.add_flag("--power-gains", power_gains,
                 "Interpret alpha..mu as power gains (squares of amplitudes)");
    app.add_flag("--nats", nats, "Report rates in nats instead of bits");
  }

  ConfigMap merged() const {
    ConfigMap base;
    if (!config_path.empty()) base = load_config_file(config_path);
    ConfigMap top;
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) top[key] = raw.at(key);
    }
    if (power_gains) top["power_gains"] = "true";
    if (nats) top["nats"] = "true";
    return overlay(std::move(base), top);
  }
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::UnstableGain: return kUnstableGain;
    case ErrorCode::NonPositivePower:
    case ErrorCode::NegativeGain:
    case ErrorCode::ZeroDelay:
    case ErrorCode::NonFinite:
    case ErrorCode::InvalidArgument:
      return kInvalidInput;
    default:
      return kFailure;
  }
}

nlohmann::json outcome_json(const SchemeOutcome& o, Method method, RateUnit unit,
                            const char* binding_override = nullptr) {
  nlohmann::json j{{"scheme", std::string(to_string(o.scheme))},
                   {"rate", o.rate},
                   {"unit", std::string(to_string(unit))},
                   {"gain", o.gain},
                   {"relay_power", o.relay_power},
                   {"method", std::string(to_string(method))}};
  j["binding"] = binding_override ? std::string(binding_override)
                                  : std::string(to_string(o.binding));
  return j;
}

SchemeOutcome forced_outcome(const SystemParams& p, Scheme scheme, double g,
                             RateUnit unit) {
  SchemeOutcome o;
  o.scheme = scheme;
  o.gain = g;
  SystemParams directional = p;
  directional.mu = 0.0;
  switch (scheme) {
    case Scheme::MCP:
      o.rate = mcp_rate_closed(p, g).in(unit);
      o.relay_power = relay_power_closed(p, g);
      break;
    case Scheme::MCP_DA:
      o.rate = mcp_rate_da(p, g).in(unit);
      o.relay_power = relay_power_closed(directional, g);
      break;
    case Scheme::MCP_HalfDuplex: {
      directional.power_mt *= 2.0;
      RateResult r = mcp_rate_da(directional, g);
      r.rate *= 0.5;
      o.rate = r.in(unit);
      o.relay_power = relay_power_closed(directional, g);
      break;
    }
    case Scheme::SCP:
      o.rate = scp_rate(p, g).in(unit);
      o.relay_power = relay_power_closed(p, g);
      break;
  }
  return o;
}

std::vector<Scheme> schemes_from(const std::vector<std::string>& names) {
  std::vector<Scheme> out;
  for (const auto& n : names) {
    if (n == "all") {
      out.insert(out.end(), {Scheme::MCP, Scheme::MCP_DA, Scheme::MCP_HalfDuplex, Scheme::SCP});
    } else {
      out.push_back(parse_scheme(n));
    }
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Per-cell uplink sum-rates with full-duplex amplify-and-forward relays",
               "relay_rates"};
  app.require_subcommand(1);

  // rate
  ParamFlags rate_params;
  std::vector<std::string> rate_schemes{"all"};
  std::optional<double> force_gain;
  CLI::App* rate = app.add_subcommand("rate", "Evaluate rates at the optimal (or a forced) gain");
  rate_params.attach(*rate);
  rate->add_option("--scheme", rate_schemes, "mcp, mcp-da, half-duplex, scp or all")
      ->delimiter(',');
  rate->add_option("--force-gain", force_gain, "Use this relay gain instead of the optimum");

  // sweep
  ParamFlags sweep_params;
  std::string sweep_var, values, range, format, output_path;
  std::vector<std::string> sweep_schemes;
  bool emit_spec = false;
  int threads = 0;
  CLI::App* sweep = app.add_subcommand("sweep", "Sweep one parameter and tabulate optimal rates");
  sweep_params.attach(*sweep);
  auto* sweep_var_opt = sweep->add_option("--sweep-var", sweep_var, "mu, alpha, eta, P_db or Q_db");
  auto* values_opt = sweep->add_option("--values", values, "Comma-separated sweep values");
  auto* range_opt = sweep->add_option("--range", range, "start:stop:step");
  auto* schemes_opt = sweep->add_option("--scheme", sweep_schemes, "Schemes to evaluate")
                          ->delimiter(',');
  auto* format_opt = sweep->add_option("--format", format, "csv or json");
  sweep->add_option("--output", output_path, "Write the table here instead of stdout");
  sweep->add_option("--threads", threads, "Worker threads (default: RELAY_RATES_THREADS or all cores)");
  sweep->add_flag("--emit-spec", emit_spec, "Print the resolved sweep spec as JSON and exit");

  // validate
  ParamFlags val_params;
  RingConfig ring;
  PsdSettings psd;
  std::optional<std::int64_t> burn_in;
  std::optional<double> sim_var_z;
  CLI::App* val = app.add_subcommand("validate", "Compare analytic predictions with a ring simulation");
  val_params.attach(*val);
  val->add_option("--cells", ring.num_cells, "Ring size");
  val->add_option("--symbols", ring.num_symbols, "Symbols per cell");
  val->add_option("--seed", ring.seed, "Generator seed");
  val->add_option("--gain", ring.gain, "Relay gain");
  val->add_option("--burn-in", burn_in, "Discarded leading symbols");
  val->add_option("--segment", psd.segment_length, "Periodogram segment length");
  val->add_option("--batches", psd.num_batches, "Batches for standard errors");
  val->add_option("--sim-var-z", sim_var_z, "Relay noise variance used by the simulation only")
      ->group("");

  std::vector<std::string> argv_storage{"relay_rates"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (rate->parsed()) {
      const ConfigMap cfg = rate_params.merged();
      const SystemParams p = validate(params_from_config(cfg));
      const RateUnit unit = rate_params.nats ? RateUnit::Nats : RateUnit::Bits;
      const std::vector<Scheme> schemes = schemes_from(rate_schemes);
      if (schemes.empty()) {
        throw Error(ErrorCode::InvalidArgument, "scheme", "no scheme requested");
      }
      nlohmann::json results = nlohmann::json::array();
      for (Scheme s : schemes) {
        if (force_gain) {
          results.push_back(outcome_json(forced_outcome(p, s, *force_gain, unit),
                                         Method::ClosedForm, unit, "Forced"));
        } else {
          const SchemeOutcome o = evaluate_scheme(p, s, unit);
          if (!o.error.empty()) {
            err << "error: " << o.error << '\n';
            return kFailure;
          }
          results.push_back(outcome_json(o, Method::ClosedForm, unit));
        }
      }
      out << nlohmann::json{{"params", to_json(p)}, {"results", results}}.dump(2) << '\n';
      return kOk;
    }

    if (sweep->parsed()) {
      ConfigMap flags;
      if (sweep_var_opt->count()) flags["sweep_var"] = sweep_var;
      if (values_opt->count()) flags["values"] = values;
      if (range_opt->count()) flags["range"] = range;
      if (format_opt->count()) flags["format"] = format;
      if (schemes_opt->count()) {
        std::string joined;
        for (const auto& s : sweep_schemes) joined += (joined.empty() ? "" : ",") + s;
        flags["schemes"] = joined;
      }
      const SweepSpec spec = sweep_spec_from_config(overlay(sweep_params.merged(), flags));
      spec.check();
      if (emit_spec) {
        out << to_json(spec).dump(2) << '\n';
        return kOk;
      }
      const auto rows = run_sweep(spec, threads > 0 ? threads : worker_threads_from_env());
      std::ofstream file;
      std::ostream* sink = &out;
      if (!output_path.empty()) {
        file.open(output_path);
        if (!file) {
          throw Error(ErrorCode::InvalidArgument, "output", "cannot open '" + output_path + "'");
        }
        sink = &file;
      }
      if (spec.output_format == OutputFormat::Csv) {
        write_csv(*sink, spec, rows);
      } else {
        write_json(*sink, spec, rows);
      }
      return kOk;
    }

    if (val->parsed()) {
      const SystemParams analytic = validate(params_from_config(val_params.merged()));
      SystemParams simulated = analytic;
      if (sim_var_z) simulated.var_z = *sim_var_z;
      ring.burn_in = burn_in;
      const ValidationReport report = run_validation(analytic, simulated, ring, psd);
      out << to_json(report).dump(2) << '\n';
      return report.pass ? kOk : kValidationFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << (e.field().empty() ? "" : " [" + e.field() + "]") << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace relay_rates::cli

#include "cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "relay_rates/error.hpp"

namespace relay_rates::cli {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void bad(const std::string& field, const std::string& message) {
  throw Error(ErrorCode::InvalidArgument, field, message);
}

double parse_double(std::string_view text, const std::string& field) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    bad(field, field + ": cannot parse '" + t + "' as a number");
  }
  return v;
}

int parse_int(std::string_view text, const std::string& field) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    bad(field, field + ": cannot parse '" + t + "' as an integer");
  }
  return v;
}

bool parse_bool(std::string_view text, const std::string& field) {
  const std::string t = trim(text);
  if (t == "1" || t == "true" || t == "yes" || t == "on") return true;
  if (t == "0" || t == "false" || t == "no" || t == "off") return false;
  bad(field, field + ": expected a boolean, got '" + t + "'");
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

const ConfigMap::mapped_type* find(const ConfigMap& cfg, const char* key) {
  const auto it = cfg.find(key);
  return it == cfg.end() ? nullptr : &it->second;
}

}  // namespace

ConfigMap parse_config(std::istream& in) {
  ConfigMap cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      bad("config", "line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    if (key.empty()) {
      bad("config", "line " + std::to_string(lineno) + ": empty key");
    }
    cfg[key] = trim(std::string_view(body).substr(eq + 1));
  }
  return cfg;
}

ConfigMap load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("config", "cannot open config file '" + path + "'");
  return parse_config(in);
}

ConfigMap overlay(ConfigMap base, const ConfigMap& top) {
  static const std::pair<const char*, const char*> kAlternates[] = {
      {"p", "p_db"}, {"p_db", "p"}, {"q", "q_db"}, {"q_db", "q"},
      {"values", "range"}, {"range", "values"}};
  for (const auto& [key, value] : top) {
    for (const auto& [a, b] : kAlternates) {
      if (key == a) base.erase(b);
    }
    base[key] = value;
  }
  return base;
}

std::string_view to_string(SweepVar v) noexcept {
  switch (v) {
    case SweepVar::Mu: return "mu";
    case SweepVar::Alpha: return "alpha";
    case SweepVar::Eta: return "eta";
    case SweepVar::PDb: return "P_db";
    case SweepVar::QDb: return "Q_db";
  }
  return "mu";
}

SweepVar parse_sweep_var(std::string_view s) {
  const std::string t = trim(s);
  if (t == "mu") return SweepVar::Mu;
  if (t == "alpha") return SweepVar::Alpha;
  if (t == "eta") return SweepVar::Eta;
  if (t == "P_db" || t == "p_db") return SweepVar::PDb;
  if (t == "Q_db" || t == "q_db") return SweepVar::QDb;
  bad("sweep_var", "unknown sweep variable '" + t + "'");
}

std::string_view to_string(OutputFormat f) noexcept {
  return f == OutputFormat::Csv ? "csv" : "json";
}

OutputFormat parse_output_format(std::string_view s) {
  const std::string t = trim(s);
  if (t == "csv") return OutputFormat::Csv;
  if (t == "json") return OutputFormat::Json;
  bad("format", "unknown output format '" + t + "'");
}

Scheme parse_scheme(std::string_view s) {
  const std::string t = trim(s);
  if (t == "mcp") return Scheme::MCP;
  if (t == "mcp-da" || t == "da") return Scheme::MCP_DA;
  if (t == "half-duplex" || t == "hd") return Scheme::MCP_HalfDuplex;
  if (t == "scp") return Scheme::SCP;
  bad("scheme", "unknown scheme '" + t + "'");
}

void SweepSpec::check() const {
  validate(base);
  if (values.empty()) bad("values", "sweep needs at least one value");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1])) {
      bad("values", "sweep values must be strictly increasing");
    }
  }
  if (schemes.empty()) bad("schemes", "at least one scheme is required");
  if (!(noise_reference > 0.0)) {
    bad("sigma2", "noise reference must be strictly positive");
  }
}

std::vector<double> default_mu_grid() {
  std::vector<double> v;
  for (int i = 0; i < 10; ++i) v.push_back(0.05 * i);
  return v;
}

std::vector<double> parse_values(std::string_view text) {
  const std::string t = trim(text);
  std::vector<double> out;
  if (t.empty()) return out;
  if (t.find(':') != std::string::npos) {
    const auto parts = split(t, ':');
    if (parts.size() != 3) bad("range", "range must be start:stop:step");
    const double start = parse_double(parts[0], "range");
    const double stop = parse_double(parts[1], "range");
    const double step = parse_double(parts[2], "range");
    if (!(step > 0.0)) bad("range", "range step must be positive");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long i = 0; i <= count; ++i) out.push_back(start + step * static_cast<double>(i));
    return out;
  }
  for (const auto& part : split(t, ',')) out.push_back(parse_double(part, "values"));
  return out;
}

double noise_reference_from_config(const ConfigMap& cfg) {
  if (const auto* v = find(cfg, "sigma2")) return parse_double(*v, "sigma2");
  return 1.0;
}

SystemParams params_from_config(const ConfigMap& cfg, const SystemParams& defaults) {
  SystemParams p = defaults;
  bool power_gains = false;
  if (const auto* v = find(cfg, "power_gains")) power_gains = parse_bool(*v, "power_gains");

  auto gain = [&](const char* key, double& field) {
    if (const auto* v = find(cfg, key)) {
      const double x = parse_double(*v, key);
      field = power_gains && x >= 0.0 ? std::sqrt(x) : x;
    }
  };
  gain("alpha", p.alpha);
  gain("beta", p.beta);
  gain("gamma", p.gamma);
  gain("eta", p.eta);
  gain("mu", p.mu);

  const double sigma2 = noise_reference_from_config(cfg);
  if (find(cfg, "sigma2")) {
    p.var_z = sigma2;
    p.var_w = sigma2;
  }
  if (const auto* v = find(cfg, "var_z")) p.var_z = parse_double(*v, "var_z");
  if (const auto* v = find(cfg, "var_w")) p.var_w = parse_double(*v, "var_w");
  if (const auto* v = find(cfg, "p")) p.power_mt = parse_double(*v, "p");
  if (const auto* v = find(cfg, "p_db")) p.power_mt = sigma2 * db_to_linear(parse_double(*v, "p_db"));
  if (const auto* v = find(cfg, "q")) p.power_rt = parse_double(*v, "q");
  if (const auto* v = find(cfg, "q_db")) p.power_rt = sigma2 * db_to_linear(parse_double(*v, "q_db"));
  if (const auto* v = find(cfg, "lambda")) p.lambda = parse_int(*v, "lambda");
  return p;
}

SweepSpec sweep_spec_from_config(const ConfigMap& cfg) {
  SweepSpec spec;
  spec.base = params_from_config(cfg);
  spec.noise_reference = noise_reference_from_config(cfg);
  if (const auto* v = find(cfg, "sweep_var")) spec.sweep_var = parse_sweep_var(*v);
  if (const auto* v = find(cfg, "values")) {
    spec.values = parse_values(*v);
  } else if (const auto* r = find(cfg, "range")) {
    spec.values = parse_values(*r);
  } else {
    spec.values = default_mu_grid();
  }
  if (const auto* v = find(cfg, "schemes")) {
    for (const auto& s : split(*v, ',')) {
      if (!s.empty()) spec.schemes.push_back(parse_scheme(s));
    }
  } else {
    spec.schemes = {Scheme::MCP, Scheme::SCP};
  }
  if (const auto* v = find(cfg, "format")) spec.output_format = parse_output_format(*v);
  if (const auto* v = find(cfg, "nats")) {
    spec.unit = parse_bool(*v, "nats") ? RateUnit::Nats : RateUnit::Bits;
  }
  return spec;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string to_config_text(const SweepSpec& spec) {
  std::ostringstream out;
  const SystemParams& p = spec.base;
  out << "# relay_rates sweep\n";
  out << "sigma2 = " << format_number(spec.noise_reference) << '\n';
  out << "alpha = " << format_number(p.alpha) << '\n';
  out << "beta = " << format_number(p.beta) << '\n';
  out << "gamma = " << format_number(p.gamma) << '\n';
  out << "eta = " << format_number(p.eta) << '\n';
  out << "mu = " << format_number(p.mu) << '\n';
  out << "p = " << format_number(p.power_mt) << '\n';
  out << "q = " << format_number(p.power_rt) << '\n';
  out << "var_z = " << format_number(p.var_z) << '\n';
  out << "var_w = " << format_number(p.var_w) << '\n';
  out << "lambda = " << p.lambda << '\n';
  out << "sweep_var = " << to_string(spec.sweep_var) << '\n';
  out << "values = ";
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    out << (i ? "," : "") << format_number(spec.values[i]);
  }
  out << "\nschemes = ";
  for (std::size_t i = 0; i < spec.schemes.size(); ++i) {
    out << (i ? "," : "") << to_string(spec.schemes[i]);
  }
  out << "\nformat = " << to_string(spec.output_format) << '\n';
  out << "nats = " << (spec.unit == RateUnit::Nats ? "true" : "false") << '\n';
  return out.str();
}

nlohmann::json to_json(const SystemParams& p) {
  return {{"alpha", p.alpha},   {"beta", p.beta},         {"gamma", p.gamma},
          {"eta", p.eta},       {"mu", p.mu},             {"power_mt", p.power_mt},
          {"power_rt", p.power_rt}, {"var_z", p.var_z},   {"var_w", p.var_w},
          {"lambda", p.lambda}};
}

nlohmann::json to_json(const SweepSpec& spec) {
  nlohmann::json schemes = nlohmann::json::array();
  for (Scheme s : spec.schemes) schemes.push_back(std::string(to_string(s)));
  return {{"base", to_json(spec.base)},
          {"noise_reference", spec.noise_reference},
          {"sweep_var", std::string(to_string(spec.sweep_var))},
          {"values", spec.values},
          {"schemes", schemes},
          {"output_format", std::string(to_string(spec.output_format))},
          {"unit", std::string(to_string(spec.unit))}};
}

SweepSpec sweep_spec_from_json(const nlohmann::json& j) {
  SweepSpec spec;
  const auto& b = j.at("base");
  spec.base.alpha = b.at("alpha").get<double>();
  spec.base.beta = b.at("beta").get<double>();
  spec.base.gamma = b.at("gamma").get<double>();
  spec.base.eta = b.at("eta").get<double>();
  spec.base.mu = b.at("mu").get<double>();
  spec.base.power_mt = b.at("power_mt").get<double>();
  spec.base.power_rt = b.at("power_rt").get<double>();
  spec.base.var_z = b.at("var_z").get<double>();
  spec.base.var_w = b.at("var_w").get<double>();
  spec.base.lambda = b.at("lambda").get<int>();
  spec.noise_reference = j.value("noise_reference", 1.0);
  spec.sweep_var = parse_sweep_var(j.at("sweep_var").get<std::string>());
  spec.values = j.at("values").get<std::vector<double>>();
  for (const auto& s : j.at("schemes")) spec.schemes.push_back(parse_scheme(s.get<std::string>()));
  spec.output_format = parse_output_format(j.value("output_format", std::string("csv")));
  spec.unit = j.value("unit", std::string("bits")) == "nats" ? RateUnit::Nats : RateUnit::Bits;
  return spec;
}

}  // namespace relay_rates::cli

#include "relay_rates/mcp_rate.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "relay_rates/relay_power.hpp"
#include "relay_rates/spectra.hpp"

namespace relay_rates {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// B >= |C| holds algebraically; a violation is a coding error, not bad input.
void assert_discriminant(const McpTerms& t, double theta) {
  if (!(t.b_minus_abs_c >= 0.0)) {
    std::fprintf(stderr,
                 "relay_rates: NegativeDiscriminant at theta=%.17g "
                 "(B=%.17g, C=%.17g)\n",
                 theta, t.b, t.c);
    std::abort();
  }
}

}  // namespace

McpTerms mcp_terms(const SystemParams& p, double g, double theta) noexcept {
  const double c = std::cos(theta);
  const double h1 = p.beta + 2.0 * p.alpha * c;
  const double h2 = p.gamma + 2.0 * p.eta * c;
  const double g2 = g * g;
  const double loop = 2.0 * g * p.mu * c;

  McpTerms t;
  t.a = p.power_mt * g2 * h1 * h1 * h2 * h2;
  t.b = p.var_z * g2 * h2 * h2 + p.var_w * (1.0 + loop * loop);
  t.c = 2.0 * p.var_w * loop;
  const double gap = 1.0 - std::abs(loop);
  t.b_minus_abs_c = p.var_z * g2 * h2 * h2 + p.var_w * gap * gap;
  return t;
}

double mcp_log_integrand(const SystemParams& p, double g, double theta) {
  const McpTerms t = mcp_terms(p, g, theta);
  assert_discriminant(t, theta);
  if (t.a == 0.0) return 0.0;
  const double abs_c = std::abs(t.c);
  // (A+B)^2 - C^2 and B^2 - C^2 in factored form; the ratio is then written
  // as 1 + A (1 + (A + 2B) / (s1 + s0)) / (B + s0) for log1p.
  const double s1 = std::sqrt((t.a + t.b_minus_abs_c) * (t.a + t.b + abs_c));
  const double s0 = std::sqrt(t.b_minus_abs_c * (t.b + abs_c));
  const double excess = t.a * (1.0 + (t.a + 2.0 * t.b) / (s1 + s0));
  return std::log1p(excess / (t.b + s0));
}

RateResult mcp_rate_closed(const SystemParams& p, double g,
                           const QuadratureSettings& quad) {
  require_stable_gain(p, g);
  RateResult out{0.0, Scheme::MCP, g, Method::ClosedForm};
  if (g == 0.0) return out;
  const auto r = integrate_periodic_1d(
      [&](double theta) { return mcp_log_integrand(p, g, theta); }, quad);
  out.rate = nats_to_bits(r.value / kTwoPi);
  return out;
}

RateResult mcp_rate_integral_2d(const SystemParams& p, double g, int lambda,
                                const QuadratureSettings& quad) {
  SystemParams q = p;
  q.lambda = lambda;
  require_stable_gain(q, g);
  if (lambda < 1) {
    throw Error(ErrorCode::ZeroDelay, "lambda", "lambda must be at least 1");
  }
  RateResult out{0.0, Scheme::MCP, g, Method::IntegralOracle};
  if (g == 0.0) return out;
  const auto r = integrate_periodic_2d_n<1>(
      [&](double theta, double phi) {
        const FreqPair f{theta, phi};
        return std::array<double, 1>{
            std::log1p(signal_psd(q, g, f) / noise_psd(q, g, f))};
      },
      quad);
  out.rate = nats_to_bits(r.value[0] / (kTwoPi * kTwoPi));
  return out;
}

RateResult mcp_rate_da(const SystemParams& p, double g,
                       const QuadratureSettings& quad) {
  SystemParams q = p;
  q.mu = 0.0;
  require_stable_gain(q, g);
  RateResult out{0.0, Scheme::MCP_DA, g, Method::ClosedForm};
  if (g == 0.0) return out;
  const double g2 = g * g;
  const auto r = integrate_periodic_1d(
      [&](double theta) {
        const double c = std::cos(theta);
        const double h1 = q.beta + 2.0 * q.alpha * c;
        const double h2 = q.gamma + 2.0 * q.eta * c;
        return std::log1p(q.power_mt * g2 * h1 * h1 * h2 * h2 /
                          (q.var_z * g2 * h2 * h2 + q.var_w));
      },
      quad);
  out.rate = nats_to_bits(r.value / kTwoPi);
  return out;
}

RateResult mcp_rate_half_duplex(const SystemParams& p,
                                const QuadratureSettings& quad) {
  SystemParams doubled = validate(p);
  doubled.power_mt *= 2.0;
  doubled.power_rt *= 2.0;
  const double g = optimal_gain_directional(doubled);
  RateResult out = mcp_rate_da(doubled, g, quad);
  out.rate *= 0.5;
  out.scheme = Scheme::MCP_HalfDuplex;
  return out;
}

RateResult mcp_rate_optimal(const SystemParams& p,
                            const QuadratureSettings& quad) {
  const GainSolution gs = solve_optimal_gain_mcp(p);
  return mcp_rate_closed(p, gs.gain, quad);
}

std::string_view to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::MCP: return "mcp";
    case Scheme::MCP_DA: return "mcp-da";
    case Scheme::MCP_HalfDuplex: return "half-duplex";
    case Scheme::SCP: return "scp";
  }
  return "unknown";
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::ClosedForm: return "closed-form";
    case Method::IntegralOracle: return "integral-oracle";
    case Method::Simulation: return "simulation";
  }
  return "unknown";
}

std::string_view to_string(RateUnit u) noexcept {
  return u == RateUnit::Bits ? "bits" : "nats";
}

}  // namespace relay_rates

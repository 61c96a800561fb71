#include "relay_rates/scp_rate.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "relay_rates/relay_power.hpp"

namespace relay_rates {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Signal and noise responses along theta at one temporal frequency. The
// relay term g exp(-j lambda phi) is fixed once per phi.
class ResponsesAtPhi {
 public:
  ResponsesAtPhi(const SystemParams& p, double g, double phi)
      : p_(p), hr_(std::polar(g, -static_cast<double>(p.lambda) * phi)) {}

  // {hs, hn} at spatial frequency theta.
  std::pair<std::complex<double>, std::complex<double>> operator()(
      double theta) const {
    const double c = std::cos(theta);
    const std::complex<double> hn =
        hr_ * (p_.gamma + 2.0 * p_.eta * c) / (1.0 - hr_ * (2.0 * p_.mu * c));
    return {(p_.beta + 2.0 * p_.alpha * c) * hn, hn};
  }

 private:
  const SystemParams& p_;
  std::complex<double> hr_;
};

}  // namespace

ScpPsdTriple scp_psds(const SystemParams& p, double g, double phi,
                      const QuadratureSettings& quad) {
  require_stable_gain(p, g);
  if (g == 0.0) return {0.0, 0.0, p.var_w};

  const ResponsesAtPhi responses(p, g, phi);
  const auto moments = integrate_periodic_1d_n<4>(
      [&](double theta) {
        const auto [hs, hn] = responses(theta);
        return std::array<double, 4>{hs.real(), hs.imag(), std::norm(hs),
                                     std::norm(hn)};
      },
      quad.tightened(10.0));

  const std::complex<double> mean_hs{moments.value[0] / kTwoPi,
                                     moments.value[1] / kTwoPi};
  const double mean_hn2 = moments.value[3] / kTwoPi;

  // Interference is the spatial variance of H_S, taken on the converged grid
  // so it is nonnegative by construction. Samples are shifted by the first
  // one: a theta-independent response then gives exactly zero.
  const int n = moments.points;
  std::vector<std::complex<double>> shifted(static_cast<std::size_t>(n));
  const std::complex<double> origin = responses(0.0).first;
  std::complex<double> shift_mean = 0.0;
  for (int k = 0; k < n; ++k) {
    shifted[k] = responses(kTwoPi * k / n).first - origin;
    shift_mean += shifted[k];
  }
  shift_mean /= static_cast<double>(n);
  double spread = 0.0;
  for (const auto& d : shifted) spread += std::norm(d - shift_mean);

  ScpPsdTriple out;
  out.psd_useful = p.power_mt * std::norm(mean_hs);
  out.psd_interference = p.power_mt * spread / n;
  out.psd_noise = p.var_z * mean_hn2 + p.var_w;
  return out;
}

RateResult scp_rate(const SystemParams& p, double g,
                    const QuadratureSettings& quad) {
  require_stable_gain(p, g);
  RateResult out{0.0, Scheme::SCP, g, Method::ClosedForm};
  if (g == 0.0) return out;
  const auto r = integrate_periodic_1d(
      [&](double phi) {
        const ScpPsdTriple s = scp_psds(p, g, phi, quad);
        return std::log1p(s.psd_useful / (s.psd_interference + s.psd_noise));
      },
      quad);
  out.rate = nats_to_bits(r.value / kTwoPi);
  return out;
}

GainSolution scp_optimal_gain(const SystemParams& raw,
                              const QuadratureSettings& quad) {
  const SystemParams p = validate(raw);
  const GainSolution full = solve_optimal_gain_mcp(p);
  const double g_max = full.gain;
  const double tol = 1e-6 * g_max;

  // Fractions of g_max: 32 log-spaced in [5e-4, 0.5], 31 log-spaced toward 1
  // from below, and 1 itself.
  std::vector<double> fractions;
  fractions.reserve(64);
  for (int i = 0; i < 32; ++i) {
    fractions.push_back(0.5 * std::pow(10.0, -3.0 * (1.0 - i / 31.0)));
  }
  for (int j = 1; j < 32; ++j) {
    fractions.push_back(1.0 - 0.5 * std::pow(10.0, -3.0 * j / 31.0));
  }
  fractions.push_back(1.0);

  auto rate_at = [&](double g) { return scp_rate(p, g, quad).rate; };

  std::vector<double> rates(fractions.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    rates[i] = rate_at(fractions[i] * g_max);
    if (rates[i] > rates[best]) best = i;
  }
  double best_g = fractions[best] * g_max;
  double best_rate = rates[best];

  // Golden-section refinement on the neighbours of the best grid point.
  double lo = fractions[best == 0 ? 0 : best - 1] * g_max;
  double hi = fractions[std::min(best + 1, fractions.size() - 1)] * g_max;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = rate_at(x1);
  double f2 = rate_at(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = rate_at(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = rate_at(x1);
    }
  }
  const double refined = f1 > f2 ? x1 : x2;
  const double refined_rate = std::max(f1, f2);
  if (refined_rate > best_rate) {
    best_g = refined;
    best_rate = refined_rate;
  }

  GainSolution out;
  out.gain = best_g;
  out.achieved_power = relay_power_closed(p, best_g);
  if (best_g < g_max - tol) {
    out.binding = Binding::Interior;
  } else {
    out.binding = full.binding;
  }
  return out;
}

RateResult scp_rate_optimal(const SystemParams& p,
                            const QuadratureSettings& quad) {
  return scp_rate(p, scp_optimal_gain(p, quad).gain, quad);
}

}  // namespace relay_rates

#include "relay_rates/spectra.hpp"

#include <cmath>
#include <numbers>

namespace relay_rates {
namespace {

double reduce_angle(double x) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  return r >= two_pi ? 0.0 : r;
}

}  // namespace

FreqPair FreqPair::reduced(double theta, double phi) noexcept {
  return {reduce_angle(theta), reduce_angle(phi)};
}

TransferEval eval_transfers(const SystemParams& p, double g, FreqPair f) {
  require_stable_gain(p, g);
  const double c = std::cos(f.theta);

  TransferEval t;
  t.h1 = {p.beta + 2.0 * p.alpha * c, 0.0};
  t.h2 = {p.gamma + 2.0 * p.eta * c, 0.0};
  t.hr = std::polar(g, -static_cast<double>(p.lambda) * f.phi);
  t.h3 = {2.0 * p.mu * c, 0.0};
  t.denominator = 1.0 - t.hr * t.h3;
  t.hn = t.hr * t.h2 / t.denominator;
  t.hs = t.h1 * t.hn;
  return t;
}

double signal_psd(const SystemParams& p, double g, FreqPair f) {
  return p.power_mt * std::norm(eval_transfers(p, g, f).hs);
}

double noise_psd(const SystemParams& p, double g, FreqPair f) {
  return p.var_z * std::norm(eval_transfers(p, g, f).hn) + p.var_w;
}

}  // namespace relay_rates

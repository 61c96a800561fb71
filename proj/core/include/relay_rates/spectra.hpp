#pragma once

#include <complex>

#include "relay_rates/params.hpp"

namespace relay_rates {

/// Spatial (theta) and temporal (phi) frequency, both reduced to [0, 2pi).
struct FreqPair {
  double theta = 0.0;
  double phi = 0.0;

  static FreqPair reduced(double theta, double phi) noexcept;
};

/// Elementary and composite 2D responses at one frequency pair.
///
///   h1 = beta + 2 alpha cos(theta)         (MT -> RT)
///   h2 = gamma + 2 eta cos(theta)          (RT -> BS)
///   hr = g exp(-j lambda phi)              (relay: gain + delay)
///   h3 = 2 mu cos(theta)                   (RT -> RT feedback)
///   hs = h1 hr h2 / (1 - hr h3),  hn = hr h2 / (1 - hr h3)
struct TransferEval {
  std::complex<double> h1;
  std::complex<double> h2;
  std::complex<double> hr;
  std::complex<double> h3;
  std::complex<double> hs;
  std::complex<double> hn;
  std::complex<double> denominator;
};

/// Throws UnstableGain when 2*mu*g >= 1.
TransferEval eval_transfers(const SystemParams& p, double g, FreqPair f);

/// P |hs|^2
double signal_psd(const SystemParams& p, double g, FreqPair f);

/// sigma_Z^2 |hn|^2 + sigma_W^2
double noise_psd(const SystemParams& p, double g, FreqPair f);

}  // namespace relay_rates

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "relay_rates/params.hpp"

namespace relay_rates {

/// Finite ring of cells approximating the infinite line. Cell indices wrap
/// around so the spatial structure is circulant.
struct RingConfig {
  int num_cells = 64;
  std::int64_t num_symbols = 1 << 16;
  /// Unset: 100 * lambda / (1 - 2 mu g), capped at num_symbols / 4.
  std::optional<std::int64_t> burn_in;
  std::uint64_t seed = 1;
  double gain = 0.4;
  /// Also record the relay and BS noise samples.
  bool keep_noise = false;
};

std::int64_t default_burn_in(const SystemParams& p, const RingConfig& cfg);

/// Sample paths stored symbol-major: element (n, m) lives at n * num_cells + m.
struct Trajectory {
  using Sample = std::complex<double>;

  int num_cells = 0;
  std::int64_t num_symbols = 0;
  int lambda = 1;
  std::int64_t burn_in = 0;
  std::vector<Sample> x;  ///< MT signals
  std::vector<Sample> r;  ///< RT transmissions
  std::vector<Sample> y;  ///< BS receptions
  std::vector<Sample> z;  ///< relay noise (keep_noise only)
  std::vector<Sample> w;  ///< BS noise (keep_noise only)

  std::size_t index(std::int64_t n, int m) const noexcept {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(num_cells) +
           static_cast<std::size_t>(m);
  }
};

/// Runs the relay and BS recursions on the ring:
///   R[m,n] = g (beta X[m,n] + alpha X[m-1,n] + alpha X[m+1,n]
///               + mu R[m-1,n-lambda] + mu R[m+1,n-lambda] + Z[m,n])
///   Y[m,n] = gamma R[m,n-lambda] + eta R[m-1,n-lambda] + eta R[m+1,n-lambda]
///            + W[m,n]
/// with R = 0 before time 0. X, Z, W are i.i.d. circular complex Gaussian.
/// Deterministic in (p, cfg).
Trajectory run_ring(const SystemParams& p, const RingConfig& cfg);

struct RelayPowerEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Sample mean of |R|^2 over all cells and post-burn-in symbols; standard
/// error from `num_batches` contiguous batch means in time.
RelayPowerEstimate estimate_relay_power(const Trajectory& traj,
                                        int num_batches = 16);

/// Same estimator applied to |Y|^2.
RelayPowerEstimate estimate_output_power(const Trajectory& traj,
                                         int num_batches = 16);

/// Row-major (rows = spatial modes, cols = temporal bins).
struct Grid2D {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  double& operator()(int i, int j) {
    return data[static_cast<std::size_t>(i) * cols + j];
  }
  double operator()(int i, int j) const {
    return data[static_cast<std::size_t>(i) * cols + j];
  }
};

struct PsdSettings {
  int segment_length = 256;
  int num_batches = 16;
  int min_segments = 64;
};

struct SimulationEstimate {
  double relay_power_mean = 0.0;
  double relay_power_stderr = 0.0;
  /// Entry (k, j) estimates the output PSD at theta = 2 pi k / num_cells,
  /// phi = 2 pi j / segment_length.
  Grid2D psd_output;
  Grid2D psd_stderr;
  int segments = 0;
};

/// Spatial DFT across the ring and a flat-window, 50%-overlap averaged
/// periodogram in time. Normalized so that white noise of variance v gives
/// a flat estimate at v. Standard errors come from batch means.
/// Throws InsufficientSamples when fewer than `min_segments` segments fit.
SimulationEstimate estimate_output_psd(const Trajectory& traj,
                                       const PsdSettings& settings = {});

// Binary trajectory dump: 32-byte header (8-byte magic "RRTRAJ01", then
// uint64 num_cells, num_symbols, lambda, little-endian) followed by
// little-endian float32 (X.re, X.im, R.re, R.im, Y.re, Y.im) for every
// (symbol, cell), symbol-major.

void write_trajectory_dump(std::ostream& out, const Trajectory& traj);

/// Reads a dump back; samples are the float32-rounded values.
Trajectory read_trajectory_dump(std::istream& in);

}  // namespace relay_rates

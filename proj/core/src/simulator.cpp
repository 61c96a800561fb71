#include "relay_rates/simulator.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <random>
#include <string>

#include "relay_rates/error.hpp"

namespace relay_rates {
namespace {

// Zero powers are allowed here: the recursion is well defined and the
// degenerate cases are useful checks.
void check_simulation_params(const SystemParams& p) {
  SystemParams relaxed = p;
  relaxed.power_mt = std::max(p.power_mt, 1.0);
  relaxed.power_rt = std::max(p.power_rt, 1.0);
  relaxed.var_z = std::max(p.var_z, 1.0);
  relaxed.var_w = std::max(p.var_w, 1.0);
  validate(relaxed);
  if (p.power_mt < 0.0 || p.var_z < 0.0 || p.var_w < 0.0) {
    throw Error(ErrorCode::NonPositivePower, "power",
                "simulation powers must be nonnegative");
  }
}

void check_config(const SystemParams& p, const RingConfig& cfg,
                  std::int64_t burn_in) {
  if (cfg.num_cells < 8) {
    throw Error(ErrorCode::InvalidArgument, "num_cells",
                "ring needs at least 8 cells");
  }
  if (cfg.num_symbols < 1) {
    throw Error(ErrorCode::InvalidArgument, "num_symbols",
                "num_symbols must be positive");
  }
  if (burn_in < 0 || burn_in >= cfg.num_symbols) {
    throw Error(ErrorCode::InvalidArgument, "burn_in",
                "burn_in must lie in [0, num_symbols)");
  }
  require_stable_gain(p, cfg.gain);
}

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(fftw_complex* ptr) const noexcept { fftw_free(ptr); }
};

struct FftwPlanDestroy {
  void operator()(fftw_plan_s* plan) const noexcept {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
};

using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;
using FftwPlan = std::unique_ptr<fftw_plan_s, FftwPlanDestroy>;

FftwBuffer make_buffer(std::size_t n) {
  return FftwBuffer(fftw_alloc_complex(n));
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double stderr_of(const std::vector<double>& v, double mean) {
  if (v.size() < 2) return 0.0;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  const double var = ss / static_cast<double>(v.size() - 1);
  return std::sqrt(var / static_cast<double>(v.size()));
}

}  // namespace

std::int64_t default_burn_in(const SystemParams& p, const RingConfig& cfg) {
  const double loop = 2.0 * p.mu * cfg.gain;
  const double raw = 100.0 * p.lambda / std::max(1.0 - loop, 1e-12);
  const auto cap = cfg.num_symbols / 4;
  return std::min<std::int64_t>(static_cast<std::int64_t>(std::ceil(raw)), cap);
}

Trajectory run_ring(const SystemParams& p, const RingConfig& cfg) {
  check_simulation_params(p);
  const std::int64_t burn_in = cfg.burn_in.value_or(default_burn_in(p, cfg));
  check_config(p, cfg, burn_in);

  Trajectory t;
  t.num_cells = cfg.num_cells;
  t.num_symbols = cfg.num_symbols;
  t.lambda = p.lambda;
  t.burn_in = burn_in;
  const std::size_t total =
      static_cast<std::size_t>(cfg.num_symbols) * static_cast<std::size_t>(cfg.num_cells);
  t.x.resize(total);
  t.r.resize(total);
  t.y.resize(total);
  if (cfg.keep_noise) {
    t.z.resize(total);
    t.w.resize(total);
  }

  std::mt19937_64 engine(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto draw = [&](double variance) {
    const double s = std::sqrt(variance / 2.0);
    const double re = normal(engine);
    const double im = normal(engine);
    return Trajectory::Sample(s * re, s * im);
  };

  const int cells = cfg.num_cells;
  const double g = cfg.gain;
  const std::vector<Trajectory::Sample> zeros(static_cast<std::size_t>(cells));
  std::vector<Trajectory::Sample> z(static_cast<std::size_t>(cells));
  std::vector<Trajectory::Sample> w(static_cast<std::size_t>(cells));

  for (std::int64_t n = 0; n < cfg.num_symbols; ++n) {
    Trajectory::Sample* x_now = &t.x[t.index(n, 0)];
    for (int m = 0; m < cells; ++m) x_now[m] = draw(p.power_mt);
    for (int m = 0; m < cells; ++m) z[m] = draw(p.var_z);
    for (int m = 0; m < cells; ++m) w[m] = draw(p.var_w);

    const Trajectory::Sample* r_past =
        n >= p.lambda ? &t.r[t.index(n - p.lambda, 0)] : zeros.data();
    Trajectory::Sample* r_now = &t.r[t.index(n, 0)];
    Trajectory::Sample* y_now = &t.y[t.index(n, 0)];
    for (int m = 0; m < cells; ++m) {
      const int left = (m + cells - 1) % cells;
      const int right = (m + 1) % cells;
      r_now[m] = g * (p.beta * x_now[m] + p.alpha * x_now[left] +
                      p.alpha * x_now[right] + p.mu * r_past[left] +
                      p.mu * r_past[right] + z[m]);
      y_now[m] = p.gamma * r_past[m] + p.eta * r_past[left] +
                 p.eta * r_past[right] + w[m];
    }
    if (cfg.keep_noise) {
      std::copy(z.begin(), z.end(), t.z.begin() + static_cast<std::ptrdiff_t>(t.index(n, 0)));
      std::copy(w.begin(), w.end(), t.w.begin() + static_cast<std::ptrdiff_t>(t.index(n, 0)));
    }
  }
  return t;
}

namespace {

RelayPowerEstimate batched_power(const Trajectory& traj,
                                 const std::vector<Trajectory::Sample>& samples,
                                 int num_batches) {
  if (num_batches < 2) {
    throw Error(ErrorCode::InvalidArgument, "num_batches",
                "need at least two batches");
  }
  const std::int64_t usable = traj.num_symbols - traj.burn_in;
  const std::int64_t batch_len = usable / num_batches;
  if (batch_len < 1) {
    throw Error(ErrorCode::InsufficientSamples, "num_symbols",
                "fewer post-burn-in symbols than batches");
  }
  std::vector<double> batch_means(static_cast<std::size_t>(num_batches));
  for (int b = 0; b < num_batches; ++b) {
    const std::int64_t start = traj.burn_in + b * batch_len;
    double s = 0.0;
    for (std::int64_t n = start; n < start + batch_len; ++n) {
      for (int m = 0; m < traj.num_cells; ++m) s += std::norm(samples[traj.index(n, m)]);
    }
    batch_means[static_cast<std::size_t>(b)] =
        s / (static_cast<double>(batch_len) * traj.num_cells);
  }
  const double mean = mean_of(batch_means);
  return {mean, stderr_of(batch_means, mean)};
}

}  // namespace

RelayPowerEstimate estimate_relay_power(const Trajectory& traj, int num_batches) {
  return batched_power(traj, traj.r, num_batches);
}

RelayPowerEstimate estimate_output_power(const Trajectory& traj, int num_batches) {
  return batched_power(traj, traj.y, num_batches);
}

SimulationEstimate estimate_output_psd(const Trajectory& traj,
                                       const PsdSettings& settings) {
  const int cells = traj.num_cells;
  const int seg = settings.segment_length;
  const int batches = settings.num_batches;
  if (seg < 2 || seg % 2 != 0 || batches < 2) {
    throw Error(ErrorCode::InvalidArgument, "segment_length",
                "segment_length must be even and num_batches >= 2");
  }
  const int hop = seg / 2;
  const std::int64_t usable = traj.num_symbols - traj.burn_in;
  const std::int64_t batch_len = usable / batches;
  const std::int64_t per_batch = batch_len >= seg ? (batch_len - seg) / hop + 1 : 0;
  if (per_batch * batches < settings.min_segments) {
    throw Error(ErrorCode::InsufficientSamples, "num_symbols",
                "only " + std::to_string(per_batch * batches) +
                    " segments of length " + std::to_string(seg) +
                    " fit after burn-in; need " +
                    std::to_string(settings.min_segments));
  }

  const std::size_t block = static_cast<std::size_t>(cells) * seg;
  FftwBuffer in = make_buffer(block);
  FftwBuffer out = make_buffer(block);
  FftwPlan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan.reset(fftw_plan_dft_2d(cells, seg, in.get(), out.get(), FFTW_FORWARD,
                                FFTW_ESTIMATE));
  }

  const double norm = 1.0 / (static_cast<double>(cells) * seg);
  std::vector<std::vector<double>> batch_psd(
      static_cast<std::size_t>(batches), std::vector<double>(block, 0.0));

  for (int b = 0; b < batches; ++b) {
    auto& acc = batch_psd[static_cast<std::size_t>(b)];
    const std::int64_t batch_start = traj.burn_in + b * batch_len;
    for (std::int64_t s = 0; s < per_batch; ++s) {
      const std::int64_t start = batch_start + s * hop;
      for (int m = 0; m < cells; ++m) {
        for (int k = 0; k < seg; ++k) {
          const auto v = traj.y[traj.index(start + k, m)];
          in[static_cast<std::size_t>(m) * seg + k][0] = v.real();
          in[static_cast<std::size_t>(m) * seg + k][1] = v.imag();
        }
      }
      fftw_execute_dft(plan.get(), in.get(), out.get());
      for (std::size_t i = 0; i < block; ++i) {
        acc[i] += (out[i][0] * out[i][0] + out[i][1] * out[i][1]) * norm;
      }
    }
    for (double& v : acc) v /= static_cast<double>(per_batch);
  }

  SimulationEstimate est;
  est.segments = static_cast<int>(per_batch * batches);
  est.psd_output = {cells, seg, std::vector<double>(block)};
  est.psd_stderr = {cells, seg, std::vector<double>(block)};
  std::vector<double> samples(static_cast<std::size_t>(batches));
  for (std::size_t i = 0; i < block; ++i) {
    for (int b = 0; b < batches; ++b) samples[static_cast<std::size_t>(b)] = batch_psd[static_cast<std::size_t>(b)][i];
    const double mean = mean_of(samples);
    est.psd_output.data[i] = mean;
    est.psd_stderr.data[i] = stderr_of(samples, mean);
  }

  const RelayPowerEstimate power = estimate_relay_power(traj, batches);
  est.relay_power_mean = power.mean;
  est.relay_power_stderr = power.std_error;
  return est;
}

}  // namespace relay_rates

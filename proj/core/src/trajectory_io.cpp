#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>

#include "relay_rates/error.hpp"
#include "relay_rates/simulator.hpp"

namespace relay_rates {
namespace {

constexpr std::array<char, 8> kMagic = {'R', 'R', 'T', 'R', 'A', 'J', '0', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> bytes{};
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  out.write(bytes.data(), bytes.size());
}

void put_f32(std::ostream& out, double v) {
  const auto bits = std::bit_cast<std::uint32_t>(static_cast<float>(v));
  std::array<char, 4> bytes{};
  for (int i = 0; i < 4; ++i) bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xffu);
  out.write(bytes.data(), bytes.size());
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | bytes[i];
  return v;
}

double get_f32(std::istream& in) {
  std::array<unsigned char, 4> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | bytes[i];
  return std::bit_cast<float>(v);
}

void fail_io(const char* what) {
  throw Error(ErrorCode::InvalidArgument, "trajectory", what);
}

}  // namespace

void write_trajectory_dump(std::ostream& out, const Trajectory& traj) {
  out.write(kMagic.data(), kMagic.size());
  put_u64(out, static_cast<std::uint64_t>(traj.num_cells));
  put_u64(out, static_cast<std::uint64_t>(traj.num_symbols));
  put_u64(out, static_cast<std::uint64_t>(traj.lambda));
  for (std::size_t i = 0; i < traj.x.size(); ++i) {
    put_f32(out, traj.x[i].real());
    put_f32(out, traj.x[i].imag());
    put_f32(out, traj.r[i].real());
    put_f32(out, traj.r[i].imag());
    put_f32(out, traj.y[i].real());
    put_f32(out, traj.y[i].imag());
  }
  if (!out) fail_io("write failed");
}

Trajectory read_trajectory_dump(std::istream& in) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) fail_io("bad trajectory magic");

  Trajectory t;
  t.num_cells = static_cast<int>(get_u64(in));
  t.num_symbols = static_cast<std::int64_t>(get_u64(in));
  t.lambda = static_cast<int>(get_u64(in));
  if (!in) fail_io("truncated header");

  const std::size_t total =
      static_cast<std::size_t>(t.num_cells) * static_cast<std::size_t>(t.num_symbols);
  t.x.resize(total);
  t.r.resize(total);
  t.y.resize(total);
  for (std::size_t i = 0; i < total; ++i) {
    const double xr = get_f32(in), xi = get_f32(in);
    const double rr = get_f32(in), ri = get_f32(in);
    const double yr = get_f32(in), yi = get_f32(in);
    t.x[i] = {xr, xi};
    t.r[i] = {rr, ri};
    t.y[i] = {yr, yi};
  }
  if (!in) fail_io("truncated sample data");
  return t;
}

}  // namespace relay_rates

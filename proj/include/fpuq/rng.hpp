// Counter-based deterministic random stream. SplitMix64 gives bit-identical
// sequences on every platform, is trivially splittable by rehashing the seed
// with a stream index, and is cheap enough to sit inside every perturbed
// floating point operation.
#pragma once

#include <cmath>
#include <cstdint>

namespace fpuq {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform on the open interval (0, 1).
  double next_unit_open() {
    for (;;) {
      const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
      if (u != 0.0) return u;
    }
  }

  /// The MCA noise term: uniform on (-1/2, 1/2).
  double next_xi() { return next_unit_open() - 0.5; }

  /// Uniform on [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; avoids the platform-defined
  /// std::normal_distribution so streams stay reproducible everywhere.
  double next_gaussian() {
    const double u1 = next_unit_open();
    const double u2 = next_unit();
    return gaussian_from(u1, u2);
  }

  /// Derive an independent stream seed from (seed, stream index).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ull * (stream + 0x632BE59BD9B4E019ull)));
    g.next_u64();
    return g.next_u64();
  }

 private:
  static double gaussian_from(double u1, double u2) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  std::uint64_t state_;
};

}  // namespace fpuq

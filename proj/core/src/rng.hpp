#pragma once

// Small deterministic RNG used for Newton starts and coefficient sampling.
// Hand-rolled (SplitMix64 + Box-Muller) so that identical seeds reproduce
// identical streams on any platform, independent of the standard library's
// distribution implementations.

#include <cmath>
#include <complex>
#include <cstdint>

namespace cubiclines::detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// One stream per (seed, lane, index) triple; streams are independent of the
// order in which they are consumed.
class Rng {
public:
  Rng(std::uint64_t seed, std::uint64_t lane, std::uint64_t index) {
    std::uint64_t s = seed ^ 0xA0761D6478BD642Full;
    splitmix64(s);
    s ^= 0x8EBC6AF09C88C6E3ull * (lane + 1);
    splitmix64(s);
    s ^= 0x589965CC75374CC3ull * (index + 1);
    state_ = splitmix64(s);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on the complex disc of the given radius.
  std::complex<double> next_in_disc(double radius) {
    const double r = radius * std::sqrt(next_double());
    const double theta = 6.283185307179586476925286766559 * next_double();
    return {r * std::cos(theta), r * std::sin(theta)};
  }

  // Standard normal via Box-Muller.
  double next_gaussian() {
    double u = next_double();
    while (u <= 0.0) u = next_double();
    const double v = next_double();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
  }

private:
  std::uint64_t state_;
};

}  // namespace cubiclines::detail

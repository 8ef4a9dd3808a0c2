#pragma once

// Counter-based random substreams.
//
// Every Monte-Carlo trial owns a stream keyed by (seed, stream id, counter),
// so the numbers a trial sees do not depend on which thread runs it or in
// what order. Key mixing and output use the SplitMix64 finalizer.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace omc {

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class CounterRng {
 public:
  using result_type = std::uint64_t;

  constexpr CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept
      : state_(splitmix64_mix(splitmix64_mix(splitmix64_mix(seed) ^
                                             (stream * 0xD1B54A32D192ED03ULL)) ^
                              (counter * 0xABC98388FB8FAC03ULL))) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return splitmix64_mix(state_);
  }

  /// Uniform on [0, 1) with 53 random bits.
  constexpr double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Standard normal variate (Box-Muller, cosine branch). Consumes two outputs.
  double normal() noexcept {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace omc

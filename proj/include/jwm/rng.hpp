#pragma once

#include <cmath>
#include <cstdint>

namespace jwm {

// SplitMix64 finalizer (Steele/Lea/Flood; Vigna's fixed-increment variant).
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Counter-derived pseudorandom stream.
///
/// Streams are cheap value types. Substreams are derived by hashing a key
/// tuple (master seed, index a, index b, ...) through the SplitMix64
/// finalizer, so any (cell, trial, chunk) decomposition yields streams that
/// are independent of scheduling order. One stream must be consumed
/// sequentially by a single owner; nothing here is shared or global.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(mix64(seed + GOLDEN)) {}

  static RngStream derive(std::uint64_t master, std::uint64_t a) {
    return RngStream(mix64(master + GOLDEN) ^ mix64(a + 0x8A183895EB1B8FF1ull));
  }
  static RngStream derive(std::uint64_t master, std::uint64_t a,
                          std::uint64_t b) {
    return RngStream(mix64(master + GOLDEN) ^ mix64(a + 0x8A183895EB1B8FF1ull) ^
                     mix64(b + 0x6C62272E07BB0142ull));
  }
  static RngStream derive(std::uint64_t master, std::uint64_t a,
                          std::uint64_t b, std::uint64_t c) {
    return RngStream(mix64(master + GOLDEN) ^ mix64(a + 0x8A183895EB1B8FF1ull) ^
                     mix64(b + 0x6C62272E07BB0142ull) ^
                     mix64(c + 0x1F83D9ABFB41BD6Bull));
  }

  std::uint64_t next_u64() {
    state_ += GOLDEN;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal variate (Box-Muller; consumes two uniforms).
  double next_normal() {
    double u1 = next_double();
    double u2 = next_double();
    // next_double() can return 0; shift into (0, 1].
    u1 = 1.0 - u1;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  static constexpr std::uint64_t GOLDEN = 0x9E3779B97F4A7C15ull;

  std::uint64_t state_;
};

}  // namespace jwm

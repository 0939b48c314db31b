#pragma once

#include <cmath>
#include <cstdint>

namespace ctrlgen {

/// Deterministic splitmix64 generator. The update and output mixing are
/// fixed so that streams are bit-identical across implementations and
/// platforms; all corpus generation, initialization, shuffling and noise
/// draws go through this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1): next() / 2^64.
  double uniform01() { return static_cast<double>(next()) * 0x1.0p-64; }

  /// Standard normal via Box-Muller on two uniform01 draws (cosine branch).
  /// A zero first draw is clamped to 2^-64 so the log stays finite.
  double gaussian() {
    double u1 = uniform01();
    double u2 = uniform01();
    if (u1 <= 0.0) u1 = 0x1.0p-64;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
  }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  std::size_t pick_index(std::size_t n) {
    return static_cast<std::size_t>(below(static_cast<std::uint64_t>(n)));
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace ctrlgen
